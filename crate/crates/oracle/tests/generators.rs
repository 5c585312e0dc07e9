use pi_core::coxeter::{shortlex_lt, Word};
use pi_core::syntax::{AxiomFamily, Comb};
use pi_oracle::*;

#[test]
fn naive_permutations() {
    assert!(perm_of_word_naive(&Word::empty(3)).is_identity());
    let reversal = Word::new(2, vec![0, 1, 0]).unwrap();
    assert_eq!(perm_of_word_naive(&reversal).table(), &[2, 1, 0]);
    let w = Word::new(3, vec![0, 1]).unwrap();
    assert_eq!(perm_of_word_naive(&w).table(), &[1, 2, 0, 3]);
}

#[test]
fn exhaustive_enumeration() {
    let small: Vec<Vec<usize>> = exhaustive_words(1, 2).unwrap().map(|w| w.letters().to_vec()).collect();
    assert_eq!(small, vec![vec![], vec![0], vec![0, 0]]);
    let words: Vec<Word> = exhaustive_words(2, 3).unwrap().collect();
    assert_eq!(words.len(), 15);
    assert!(words.windows(2).all(|p| shortlex_lt(p[0].letters(), p[1].letters())));
    assert!(matches!(exhaustive_words(6, 20), Err(TooManyWords(_))));
}

#[test]
fn generation_is_reproducible_and_well_typed() {
    for seed in 0..300 {
        let c = gen_comb(seed, 8, 12);
        assert_eq!(c, gen_comb(seed, 8, 12));
        c.typecheck().unwrap_or_else(|e| panic!("seed {seed}: {e}"));
        assert!(c.source().size() <= 12);
        let (a, b, _) = gen_pair(seed, 8, 12);
        a.typecheck().unwrap();
        b.typecheck().unwrap();
        assert_eq!(a.source().size(), b.source().size());
    }
}

#[test]
fn pairs_cover_every_kind() {
    let kinds: Vec<PairKind> = (0..60).map(|s| gen_pair(s, 6, 8).2).collect();
    for k in [PairKind::Padded, PairKind::Independent, PairKind::Perturbed] {
        assert!(kinds.contains(&k));
    }
}

#[test]
fn axiom_instances_typecheck() {
    let mut r = rng(7);
    for family in AxiomFamily::ALL {
        for _ in 0..5 {
            let a = gen_axiom2(&mut r, family);
            a.sides().unwrap_or_else(|e| panic!("{}: {e}", family.name()));
        }
    }
}

#[test]
fn shrinking_keeps_the_failure() {
    let has_swap = |c: &Comb| c.to_string().contains("swap+");
    let big = (0..200).map(|s| gen_comb(s, 12, 8)).find(|c| has_swap(c) && c.node_count() > 5).unwrap();
    let small = shrink_loop(big.clone(), has_swap);
    assert!(has_swap(&small));
    assert!(small.node_count() < big.node_count());
    small.typecheck().unwrap();
}

#[test]
fn permutation_enumeration() {
    assert_eq!(all_permutations(0).len(), 1);
    assert_eq!(all_permutations(4).len(), 24);
    assert_eq!(all_permutations(3)[1].table(), &[0, 2, 1]);
    let mut r = rng(1);
    assert_eq!(random_permutation(&mut r, 9).len(), 9);
}
