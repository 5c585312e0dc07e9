//! Reference implementations and random generators for testing `pi-core`.
//!
//! Nothing here calls the rewriting, Lehmer or translation code under
//! test: permutations of words are computed by multiplying permutation
//! matrices, and generators only build syntax.

use pi_core::coxeter::Word;
use pi_core::syntax::{Axiom2, AxiomFamily, Comb, PiType, Prim};
use pi_core::Permutation;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

type Matrix = Vec<Vec<u8>>;

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn transposition_matrix(n: usize, t: usize) -> Matrix {
    let mut m: Matrix = (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect();
    m.swap(t, t + 1);
    m
}

/// The arrangement of `[0, .., degree]` after applying each letter's
/// transposition in order, computed as a product of permutation matrices.
pub fn perm_of_word_naive(w: &Word) -> Permutation {
    let n = w.degree() + 1;
    let m = w.letters().iter().fold(identity_matrix(n), |acc, &t| matmul(&transposition_matrix(n, t), &acc));
    let table = m.iter().map(|row| row.iter().enumerate().map(|(j, &e)| usize::from(e) * j).sum()).collect();
    Permutation::from_table(table).expect("a product of permutation matrices")
}

fn identity_matrix(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| u8::from(i == j)).collect()).collect()
}

/// A uniformly random word with `len` letters below `degree`.
pub fn random_word(rng: &mut impl Rng, degree: usize, len: usize) -> Word {
    let letters = if degree == 0 { Vec::new() } else { (0..len).map(|_| rng.gen_range(0..degree)).collect() };
    Word::new(degree, letters).expect("letters below the degree")
}

/// Refused enumeration: the stream would exceed [`WORD_CAP`] words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TooManyWords(pub u128);

pub const WORD_CAP: u128 = 2_000_000;

/// Every word over letters `0..n` of length at most `max_len`, in shortlex
/// order.
pub fn exhaustive_words(n: usize, max_len: usize) -> Result<impl Iterator<Item = Word>, TooManyWords> {
    let count: u128 = (0..=max_len as u32).map(|k| (n as u128).pow(k)).sum();
    if count > WORD_CAP {
        return Err(TooManyWords(count));
    }
    let lengths = if n == 0 { 0..=0 } else { 0..=max_len };
    Ok(lengths.flat_map(move |len| {
        let total = n.pow(len as u32);
        (0..total).map(move |mut rank| {
            let mut letters = vec![0; len];
            for slot in letters.iter_mut().rev() {
                *slot = rank % n;
                rank /= n;
            }
            Word::new(n, letters).expect("letters below n")
        })
    }))
}

/// A random type with at most `max_size` elements.
pub fn gen_type(rng: &mut impl Rng, max_size: usize) -> PiType {
    gen_type_depth(rng, max_size, 3)
}

fn gen_type_depth(rng: &mut impl Rng, max_size: usize, depth: usize) -> PiType {
    if depth == 0 || max_size <= 1 || rng.gen_range(0..5) == 0 {
        return if max_size == 0 || rng.gen_bool(0.25) { PiType::Zero } else { PiType::One };
    }
    match rng.gen_range(0..4) {
        0 | 1 => {
            let a = gen_type_depth(rng, max_size, depth - 1);
            let b = gen_type_depth(rng, max_size - a.size(), depth - 1);
            PiType::sum(a, b)
        }
        _ => {
            let a = gen_type_depth(rng, max_size, depth - 1);
            let room = if a.size() == 0 { max_size } else { max_size / a.size() };
            let b = gen_type_depth(rng, room, depth - 1);
            PiType::prod(a, b)
        }
    }
}

/// Primitives applicable at `src`, each with a target.
fn applicable(rng: &mut impl Rng, src: &PiType) -> Vec<Comb> {
    Prim::ALL
        .iter()
        .filter_map(|&op| {
            if op.target_underdetermined() {
                let extra = gen_type_depth(rng, 3, 1);
                let tgt = match op {
                    Prim::Factorzl => PiType::prod(PiType::Zero, extra),
                    _ => PiType::prod(extra, PiType::Zero),
                };
                Comb::prim_at(op, src.clone(), tgt).ok()
            } else {
                Comb::prim(op, src.clone()).ok()
            }
        })
        .collect()
}

/// A random well-typed program with source `src` and about `budget` nodes.
pub fn gen_from(rng: &mut impl Rng, src: &PiType, budget: usize) -> Comb {
    if budget <= 1 {
        let options = applicable(rng, src);
        return options.choose(rng).cloned().unwrap_or_else(|| Comb::id(src.clone()));
    }
    match (rng.gen_range(0..4), src) {
        (1, PiType::Sum(a, b)) => {
            let left = budget / 2;
            Comb::plus(gen_from(rng, a, left), gen_from(rng, b, budget - 1 - left))
        }
        (2, PiType::Prod(a, b)) => {
            let left = budget / 2;
            Comb::times(gen_from(rng, a, left), gen_from(rng, b, budget - 1 - left))
        }
        _ => {
            let first = rng.gen_range(1..budget);
            let a = gen_from(rng, src, first);
            let b = gen_from(rng, &a.target(), budget - first);
            Comb::seq(a, b)
        }
    }
}

/// A random program on a type with at most `type_bound` elements, fully
/// determined by `seed`.
pub fn gen_comb(seed: u64, size_bound: usize, type_bound: usize) -> Comb {
    let mut r = rng(seed);
    let src = gen_type(&mut r, type_bound);
    let budget = r.gen_range(1..=size_bound.max(1));
    gen_from(&mut r, &src, budget)
}

/// A program `ty <-> ty` built from local symmetries.
pub fn gen_shuffle(rng: &mut impl Rng, ty: &PiType) -> Comb {
    match ty {
        PiType::Sum(a, b) => {
            let inner = Comb::plus(gen_shuffle(rng, a), gen_shuffle(rng, b));
            if a == b && rng.gen_bool(0.5) {
                Comb::seq(inner, Comb::prim(Prim::SwapPlus, ty.clone()).expect("sum"))
            } else {
                inner
            }
        }
        PiType::Prod(a, b) => {
            let inner = Comb::times(gen_shuffle(rng, a), gen_shuffle(rng, b));
            if a == b && rng.gen_bool(0.5) {
                Comb::seq(inner, Comb::prim(Prim::SwapStar, ty.clone()).expect("product"))
            } else {
                inner
            }
        }
        _ => Comb::id(ty.clone()),
    }
}

/// A random program `ty <-> ty`: out along a random path, shuffle, back.
pub fn gen_endo(rng: &mut impl Rng, ty: &PiType, budget: usize) -> Comb {
    let out = gen_from(rng, ty, budget);
    let mid = gen_shuffle(rng, &out.target());
    Comb::seq(out.clone(), Comb::seq(mid, out.invert()))
}

/// How a generated pair was produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairKind {
    /// `c ; r ; inv r` against `c`: always equal.
    Padded,
    /// Two unrelated programs on types of equal size.
    Independent,
    /// `c` against `c ; s` for a random symmetry `s`.
    Perturbed,
}

/// A pair of well-typed programs acting on the same number of elements.
pub fn gen_pair(seed: u64, size_bound: usize, type_bound: usize) -> (Comb, Comb, PairKind) {
    let mut r = rng(seed);
    let src = gen_type(&mut r, type_bound);
    let budget = r.gen_range(1..=size_bound);
    let c1 = gen_from(&mut r, &src, budget);
    match r.gen_range(0..3) {
        0 => {
            let budget = r.gen_range(1..=size_bound);
            let detour = gen_from(&mut r, &c1.target(), budget);
            let c2 = Comb::seq(c1.clone(), Comb::seq(detour.clone(), detour.invert()));
            (c1, c2, PairKind::Padded)
        }
        1 => {
            let budget = r.gen_range(1..=size_bound);
            let c2 = gen_from(&mut r, &src, budget);
            (c1, c2, PairKind::Independent)
        }
        _ => {
            let s = gen_shuffle(&mut r, &c1.target());
            let c2 = Comb::seq(c1.clone(), s);
            (c1, c2, PairKind::Perturbed)
        }
    }
}

fn fresh(rng: &mut impl Rng) -> Comb {
    let t = gen_type(rng, 6);
    let budget = rng.gen_range(1..=4);
    gen_from(rng, &t, budget)
}

/// A random instance of an axiom family.
pub fn gen_axiom2(rng: &mut impl Rng, family: AxiomFamily) -> Axiom2 {
    use AxiomFamily::*;
    let (ncombs, ntypes) = family.arity();
    let types: Vec<PiType> = (0..ntypes).map(|_| gen_type(rng, 4)).collect();
    let combs: Vec<Comb> = match family {
        AssocSeqL | AssocSeqR => {
            let c0 = fresh(rng);
            let c1 = gen_from(rng, &c0.target(), 3);
            let c2 = gen_from(rng, &c1.target(), 3);
            vec![c0, c1, c2]
        }
        UnitePlusLL | UnitePlusLR | UnitiPlusLL | UnitiPlusLR => {
            vec![gen_endo(rng, &PiType::Zero, 2), fresh(rng)]
        }
        HomPlusSeq | HomSeqPlus => {
            let (c0, c1) = (fresh(rng), fresh(rng));
            let c2 = gen_from(rng, &c0.target(), 3);
            let c3 = gen_from(rng, &c1.target(), 3);
            vec![c0, c1, c2, c3]
        }
        _ => (0..ncombs).map(|_| fresh(rng)).collect(),
    };
    Axiom2::instance(family, combs, types)
}

/// Candidate one-step reductions of `c`, each well-typed and smaller.
pub fn shrink(c: &Comb) -> Vec<Comb> {
    let mut out = Vec::new();
    let (src, tgt) = (c.source(), c.target());
    match c {
        Comb::Prim { .. } => {
            if src == tgt && !matches!(c, Comb::Prim { op: Prim::Id, .. }) {
                out.push(Comb::id(src));
            }
            return out;
        }
        Comb::Seq(a, b) | Comb::Plus(a, b) | Comb::Times(a, b) => {
            out.push((**a).clone());
            out.push((**b).clone());
            let rebuild = |x: Comb, y: Comb| match c {
                Comb::Seq(..) => Comb::seq(x, y),
                Comb::Plus(..) => Comb::plus(x, y),
                _ => Comb::times(x, y),
            };
            for a2 in shrink(a).into_iter().filter(|x| x.source() == a.source() && x.target() == a.target()) {
                out.push(rebuild(a2, (**b).clone()));
            }
            for b2 in shrink(b).into_iter().filter(|x| x.source() == b.source() && x.target() == b.target()) {
                out.push(rebuild((**a).clone(), b2));
            }
        }
    }
    out.retain(|x| x.typecheck().is_ok());
    out
}

/// Greedily replaces `c` by a smaller term on which `fails` still holds.
pub fn shrink_loop(mut c: Comb, fails: impl Fn(&Comb) -> bool) -> Comb {
    while let Some(smaller) = shrink(&c).into_iter().find(|x| fails(x)) {
        c = smaller;
    }
    c
}

/// Every permutation of `n` elements, in lexicographic order of tables.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_table(prefix.clone()).expect("distinct entries"));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A uniformly random permutation of `n` elements.
pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut table: Vec<usize> = (0..n).collect();
    table.shuffle(rng);
    Permutation::from_table(table).expect("a shuffle is a bijection")
}
