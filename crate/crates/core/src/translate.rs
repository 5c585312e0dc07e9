//! Translations between the full language, its additive fragment, the
//! skeletal fragment over sizes, and words.

use crate::coxeter::{word_to_perm, Word};
use crate::permutation::Permutation;
use crate::syntax::{Comb, CombHat, CombPlus, PiType, PlusPrim, Prim, TypeError};

/// The additive type standing for `X * Y`, by recursion on `X`.
pub fn times_encode(x: &PiType, y: &PiType) -> PiType {
    match x {
        PiType::Zero => PiType::Zero,
        PiType::One => y.clone(),
        PiType::Sum(a, b) => PiType::sum(times_encode(a, y), times_encode(b, y)),
        PiType::Prod(..) => times_encode(&eval_type(x), y),
    }
}

/// Replaces every product by its additive encoding.
pub fn eval_type(t: &PiType) -> PiType {
    match t {
        PiType::Zero | PiType::One => t.clone(),
        PiType::Sum(a, b) => PiType::sum(eval_type(a), eval_type(b)),
        PiType::Prod(a, b) => times_encode(&eval_type(a), &eval_type(b)),
    }
}

fn prim(op: PlusPrim, src: PiType) -> CombPlus {
    CombPlus::prim(op, src).expect("additive primitive at an additive type")
}

/// Translates a program into the additive fragment. Product structure is
/// unfolded so that the canonical enumerations of `A` and `eval_type(A)`
/// agree, which makes the translation preserve denotations exactly.
pub fn eval_pi_to_plus(c: &Comb) -> Result<CombPlus, TypeError> {
    c.typecheck()?;
    Ok(eval1(c))
}

fn eval1(c: &Comb) -> CombPlus {
    match c {
        Comb::Seq(a, b) => CombPlus::seq(eval1(a), eval1(b)),
        Comb::Plus(a, b) => CombPlus::plus(eval1(a), eval1(b)),
        Comb::Times(a, b) => {
            let (e1, e2) = (eval1(a), eval1(b));
            let left = tensor_left(&e1, &eval_type(&b.source()));
            let right = tensor_right(&eval_type(&a.target()), &e2);
            CombPlus::seq(left, right)
        }
        Comb::Prim { op, src, tgt } => {
            let es = eval_type(src);
            match op {
                Prim::Id => CombPlus::id(es),
                Prim::UnitePlusL => prim(PlusPrim::UnitePlus, es),
                Prim::UnitiPlusL => prim(PlusPrim::UnitiPlus, es),
                Prim::SwapPlus => prim(PlusPrim::SwapPlus, es),
                Prim::AssoclPlus => prim(PlusPrim::AssoclPlus, es),
                Prim::AssocrPlus => prim(PlusPrim::AssocrPlus, es),
                Prim::UnitePlusR => {
                    let swapped = prim(PlusPrim::SwapPlus, es);
                    let unite = prim(PlusPrim::UnitePlus, swapped.target());
                    CombPlus::seq(swapped, unite)
                }
                Prim::UnitiPlusR => {
                    let uniti = prim(PlusPrim::UnitiPlus, es);
                    let swap = prim(PlusPrim::SwapPlus, uniti.target());
                    CombPlus::seq(uniti, swap)
                }
                Prim::UniteStarL
                | Prim::UnitiStarL
                | Prim::UniteStarR
                | Prim::UnitiStarR
                | Prim::AssoclStar
                | Prim::AssocrStar
                | Prim::Dist
                | Prim::Factor
                | Prim::Absorbr
                | Prim::Factorzl => CombPlus::id(es),
                Prim::Absorbl => zero_intro(&eval_type(left_factor(src))).invert(),
                Prim::Factorzr => zero_intro(&eval_type(left_factor(tgt))),
                Prim::SwapStar => {
                    let PiType::Prod(x, y) = src else { unreachable!("swap* at a product") };
                    swap_times(&eval_type(x), &eval_type(y))
                }
            }
        }
    }
}

fn left_factor(t: &PiType) -> &PiType {
    match t {
        PiType::Prod(a, _) => a,
        _ => unreachable!("expected a product"),
    }
}

/// `0 <-> times_encode(Y, 0)`.
fn zero_intro(y: &PiType) -> CombPlus {
    match y {
        PiType::Sum(a, b) => {
            let split = prim(PlusPrim::UnitiPlus, PiType::Zero);
            CombPlus::seq(split, CombPlus::plus(zero_intro(a), zero_intro(b)))
        }
        _ => CombPlus::id(PiType::Zero),
    }
}

/// `times_encode(X, Y) <-> times_encode(Y, X)` for additive `X`, `Y`.
fn swap_times(x: &PiType, y: &PiType) -> CombPlus {
    match x {
        PiType::Zero => zero_intro(y),
        PiType::One => CombPlus::id(y.clone()),
        PiType::Sum(x1, x2) => {
            let halves = CombPlus::plus(swap_times(x1, y), swap_times(x2, y));
            CombPlus::seq(halves, distl(y, x1, x2).invert())
        }
        PiType::Prod(..) => unreachable!("additive type expected"),
    }
}

/// `times_encode(Y, X1 + X2) <-> times_encode(Y, X1) + times_encode(Y, X2)`.
fn distl(y: &PiType, x1: &PiType, x2: &PiType) -> CombPlus {
    match y {
        PiType::Zero => prim(PlusPrim::UnitiPlus, PiType::Zero),
        PiType::One => CombPlus::id(PiType::sum(x1.clone(), x2.clone())),
        PiType::Sum(y1, y2) => {
            let halves = CombPlus::plus(distl(y1, x1, x2), distl(y2, x1, x2));
            let shuffle = middle_four(&halves.target());
            CombPlus::seq(halves, shuffle)
        }
        PiType::Prod(..) => unreachable!("additive type expected"),
    }
}

/// `(a + b) + (c + d) <-> (a + c) + (b + d)`.
fn middle_four(t: &PiType) -> CombPlus {
    let PiType::Sum(ab, cd) = t else { unreachable!() };
    let (PiType::Sum(a, b), PiType::Sum(c, d)) = (&**ab, &**cd) else { unreachable!() };
    let (a, b, c, d) = (a.as_ref().clone(), b.as_ref().clone(), c.as_ref().clone(), d.as_ref().clone());
    let out = prim(PlusPrim::AssocrPlus, t.clone());
    let inner = {
        let l = prim(PlusPrim::AssoclPlus, PiType::sum(b.clone(), PiType::sum(c.clone(), d.clone())));
        let s = CombPlus::plus(prim(PlusPrim::SwapPlus, PiType::sum(b.clone(), c.clone())), CombPlus::id(d.clone()));
        let r = prim(PlusPrim::AssocrPlus, PiType::sum(PiType::sum(c.clone(), b.clone()), d.clone()));
        CombPlus::seq(l, CombPlus::seq(s, r))
    };
    let back = prim(PlusPrim::AssoclPlus, PiType::sum(a.clone(), PiType::sum(c, PiType::sum(b, d))));
    CombPlus::seq(out, CombPlus::seq(CombPlus::plus(CombPlus::id(a), inner), back))
}

/// `c * id` on encoded types: `c` acts on the left factor.
fn tensor_left(c: &CombPlus, y: &PiType) -> CombPlus {
    match c {
        CombPlus::Seq(a, b) => CombPlus::seq(tensor_left(a, y), tensor_left(b, y)),
        CombPlus::Plus(a, b) => CombPlus::plus(tensor_left(a, y), tensor_left(b, y)),
        CombPlus::Prim { op, src, .. } => prim(*op, times_encode(src, y)),
    }
}

/// `id * c` on encoded types: one copy of `c` per element of `X`.
fn tensor_right(x: &PiType, c: &CombPlus) -> CombPlus {
    match x {
        PiType::Zero => CombPlus::id(PiType::Zero),
        PiType::One => c.clone(),
        PiType::Sum(a, b) => CombPlus::plus(tensor_right(a, c), tensor_right(b, c)),
        PiType::Prod(..) => unreachable!("additive type expected"),
    }
}

/// Translates an additive program into the skeletal fragment.
pub fn eval_plus_to_hat(c: &CombPlus) -> CombHat {
    match c {
        CombPlus::Prim { op: PlusPrim::SwapPlus, src: PiType::Sum(a, b), .. } => big_swap(a.size(), b.size()),
        CombPlus::Prim { src, .. } => CombHat::Id(src.size()),
        CombPlus::Seq(a, b) => CombHat::seq(eval_plus_to_hat(a), eval_plus_to_hat(b)),
        CombPlus::Plus(a, b) => {
            let (h1, h2) = (eval_plus_to_hat(a), eval_plus_to_hat(b));
            let (n, m) = (a.source().size(), b.source().size());
            CombHat::seq(h1.widen(m), CombHat::lift_n(h2, n))
        }
    }
}

/// Exchanges a leading block of `n` elements with the following `m`.
pub fn big_swap(n: usize, m: usize) -> CombHat {
    if n == 0 {
        return CombHat::Id(m);
    }
    let size = n + m;
    let mut steps = Vec::new();
    if n > 1 {
        steps.push(CombHat::lift(big_swap(n - 1, m)));
    }
    steps.extend((0..m).map(|k| CombHat::lift_n(CombHat::Swap(size - k), k)));
    join(steps).unwrap_or(CombHat::Id(size))
}

fn join(steps: Vec<CombHat>) -> Option<CombHat> {
    steps.into_iter().rev().reduce(|rest, c| CombHat::seq(c, rest))
}

/// The additive type `1 + (1 + (... + 0))` standing for size `n`.
pub fn quote_type(n: usize) -> PiType {
    PiType::ones(n)
}

/// Reads a skeletal program back as an additive one over [`quote_type`].
pub fn quote_hat_to_plus(c: &CombHat) -> CombPlus {
    match c {
        CombHat::Id(n) => CombPlus::id(quote_type(*n)),
        CombHat::Swap(n) => {
            let rest = quote_type(n - 2);
            let l = prim(PlusPrim::AssoclPlus, quote_type(*n));
            let s = CombPlus::plus(prim(PlusPrim::SwapPlus, PiType::two()), CombPlus::id(rest.clone()));
            let r = prim(PlusPrim::AssocrPlus, PiType::sum(PiType::two(), rest));
            CombPlus::seq(l, CombPlus::seq(s, r))
        }
        CombHat::Seq(a, b) => CombPlus::seq(quote_hat_to_plus(a), quote_hat_to_plus(b)),
        CombHat::Lift(c) => CombPlus::plus(CombPlus::id(PiType::One), quote_hat_to_plus(c)),
    }
}

/// The adjacent transpositions performed by a skeletal program, in order.
pub fn hat_to_word(c: &CombHat) -> Word {
    fn go(c: &CombHat, shift: usize, out: &mut Vec<usize>) {
        match c {
            CombHat::Id(_) => {}
            CombHat::Swap(_) => out.push(shift),
            CombHat::Seq(a, b) => {
                go(a, shift, out);
                go(b, shift, out);
            }
            CombHat::Lift(c) => go(c, shift + 1, out),
        }
    }
    let mut letters = Vec::new();
    go(c, 0, &mut letters);
    Word::new(c.size().saturating_sub(1), letters).expect("letters fit the size")
}

/// One lifted swap per letter, at size `degree + 1`.
pub fn word_to_hat(w: &Word) -> CombHat {
    let size = w.degree() + 1;
    w.letters()
        .iter()
        .rev()
        .fold(CombHat::Id(size), |rest, &k| CombHat::seq(CombHat::lift_n(CombHat::Swap(size - k), k), rest))
}

/// The bijection computed by a skeletal program, as input index to output
/// index.
pub fn hat_denote(c: &CombHat) -> Permutation {
    if c.size() == 0 {
        return Permutation::identity(0);
    }
    word_to_perm(&hat_to_word(c)).inverse()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::denote_comb;

    fn perm(t: &[usize]) -> Permutation {
        Permutation::from_table(t.to_vec()).unwrap()
    }

    fn denote_plus(c: &CombPlus) -> Permutation {
        denote_comb(&c.to_comb()).unwrap()
    }

    #[test]
    fn encoded_types() {
        let two = PiType::two();
        assert_eq!(times_encode(&PiType::Zero, &two), PiType::Zero);
        assert_eq!(times_encode(&PiType::One, &two), two);
        assert_eq!(times_encode(&two, &two), PiType::sum(two.clone(), two.clone()));
        for n in 0..4 {
            assert_eq!(eval_type(&PiType::bits(n)).size(), 1 << n);
        }
    }

    #[test]
    fn big_swap_cases() {
        assert_eq!(big_swap(1, 1), CombHat::Swap(2));
        assert_eq!(big_swap(0, 3), CombHat::Id(3));
        assert_eq!(hat_denote(&big_swap(1, 2)), perm(&[2, 0, 1]));
        for n in 0..4 {
            for m in 0..4 {
                let there = hat_denote(&big_swap(n, m));
                let back = hat_denote(&big_swap(m, n));
                assert!(there.then(&back).unwrap().is_identity());
                assert_eq!(big_swap(n, m).check(), Ok(n + m));
            }
        }
    }

    #[test]
    fn quoting() {
        assert_eq!(quote_type(2), PiType::sum(PiType::One, PiType::sum(PiType::One, PiType::Zero)));
        let q = quote_hat_to_plus(&CombHat::lift(CombHat::Swap(2)));
        assert_eq!(q.to_string(), "id (+) (assocl+ ; swap+ (+) id ; assocr+)");
        assert_eq!(denote_plus(&q), perm(&[0, 2, 1]));
        assert_eq!(quote_hat_to_plus(&CombHat::Id(3)), CombPlus::id(quote_type(3)));
    }

    #[test]
    fn words_and_hats() {
        assert_eq!(hat_to_word(&CombHat::lift(CombHat::Swap(2))).letters(), &[1]);
        let w = Word::new(2, vec![0, 1, 0]).unwrap();
        let h = word_to_hat(&w);
        assert_eq!(hat_to_word(&h), w);
        assert_eq!(hat_denote(&h), perm(&[2, 1, 0]));
        assert_eq!(hat_denote(&h), word_to_perm(&w).inverse());
        assert!(hat_denote(&CombHat::Id(4)).is_identity());
        assert_eq!(hat_denote(&CombHat::Swap(2)), perm(&[1, 0]));
    }

    #[test]
    fn swap_star_and_dist_translate_faithfully() {
        let b2 = PiType::bits(2);
        let three = PiType::numeral(3);
        let cases = [
            Comb::prim(Prim::SwapStar, PiType::prod(three.clone(), PiType::two())).unwrap(),
            Comb::prim(Prim::SwapStar, PiType::prod(PiType::two(), b2.clone())).unwrap(),
            Comb::prim(Prim::Dist, PiType::prod(PiType::two(), three.clone())).unwrap(),
            Comb::prim(Prim::AssoclStar, PiType::prod(PiType::two(), b2.clone())).unwrap(),
            Comb::prim(Prim::Absorbl, PiType::prod(three.clone(), PiType::Zero)).unwrap(),
            Comb::prim(Prim::UnitePlusR, PiType::sum(three.clone(), PiType::Zero)).unwrap(),
            Comb::times(Comb::prim(Prim::SwapPlus, three.clone()).unwrap(), Comb::prim(Prim::SwapPlus, PiType::two()).unwrap()),
        ];
        for c in cases {
            let e = eval_pi_to_plus(&c).unwrap();
            let (s, t) = e.typecheck().unwrap();
            assert_eq!(s, eval_type(&c.source()));
            assert_eq!(t, eval_type(&c.target()));
            let expected = denote_comb(&c).unwrap();
            assert_eq!(denote_plus(&e), expected, "{c}");
            assert_eq!(hat_denote(&eval_plus_to_hat(&e)), expected, "{c}");
        }
    }
}
