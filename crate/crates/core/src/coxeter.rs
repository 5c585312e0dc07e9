//! Words over adjacent transpositions and the rewriting system that puts
//! them in normal form.
//!
//! Letter `k` is the transposition of positions `k` and `k + 1`. A word of
//! degree `n` uses letters below `n` and acts on `n + 1` elements.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::permutation::Permutation;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    degree: usize,
    letters: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("letter {letter} at position {position} is out of range for degree {degree}")]
    LetterOutOfRange { letter: usize, position: usize, degree: usize },
    #[error("degrees differ: {0} and {1}")]
    DegreeMismatch(usize, usize),
    #[error("malformed word `{0}`; expected e.g. `n=4 [0,1,0,3,2]`")]
    Syntax(String),
}

impl Word {
    pub fn new(degree: usize, letters: Vec<usize>) -> Result<Word, WordError> {
        if let Some((position, &letter)) = letters.iter().enumerate().find(|(_, &l)| l >= degree) {
            return Err(WordError::LetterOutOfRange { letter, position, degree });
        }
        Ok(Word { degree, letters })
    }

    pub fn empty(degree: usize) -> Word {
        Word { degree, letters: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn with_letters(&self, letters: Vec<usize>) -> Word {
        Word { degree: self.degree, letters }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} {}", self.degree, Letters(&self.letters))
    }
}

/// Renders letters as `[a,b,c]`.
pub struct Letters<'a>(pub &'a [usize]);

impl fmt::Display for Letters<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("]")
    }
}

/// Parses `[a,b,c]`.
pub fn parse_letters(s: &str) -> Option<Vec<usize>> {
    let inner = s.trim().strip_prefix('[')?.strip_suffix(']')?.trim();
    if inner.is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse().ok()).collect()
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Word, WordError> {
        let bad = || WordError::Syntax(s.trim().to_string());
        let rest = s.trim().strip_prefix("n=").ok_or_else(bad)?;
        let split = rest.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
        let degree = rest[..split].parse().map_err(|_| bad())?;
        let letters = parse_letters(&rest[split..]).ok_or_else(bad)?;
        Word::new(degree, letters)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `[x, x]` to `[]`.
    Cancel,
    /// `[x, k]` to `[k, x]` when `k + 1 < x`.
    Swap,
    /// A descending run `[m, m-1, .., m-j]` (`j >= 1`) followed by `m`
    /// becomes `m - 1` followed by the run.
    Braid,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::Cancel => "cancel",
            Rule::Swap => "swap",
            Rule::Braid => "braid",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    pub rule: Rule,
    pub position: usize,
    pub before: Word,
    pub after: Word,
}

/// `n ↙ k`: the descending run `[k+n-1, .., n]`, which moves the element at
/// index `n + k` left by `k` places.
pub fn swoop(n: usize, k: usize) -> Vec<usize> {
    (n..n + k).rev().collect()
}

/// Length of the braid redex starting at `i`, if there is one.
fn braid_len(w: &[usize], i: usize) -> Option<usize> {
    let top = w[i];
    let mut run = 1;
    while i + run < w.len() && top >= run && w[i + run] == top - run {
        run += 1;
    }
    (run >= 2 && w.get(i + run) == Some(&top)).then_some(run + 1)
}

fn matches_at(w: &[usize], rule: Rule, i: usize) -> bool {
    match rule {
        Rule::Cancel => i + 1 < w.len() && w[i] == w[i + 1],
        Rule::Swap => i + 1 < w.len() && w[i + 1] + 1 < w[i],
        Rule::Braid => braid_len(w, i).is_some(),
    }
}

/// Every redex, ordered by position and then cancel, swap, braid.
pub fn redexes(w: &[usize]) -> Vec<(Rule, usize)> {
    (0..w.len())
        .flat_map(|i| [Rule::Cancel, Rule::Swap, Rule::Braid].into_iter().map(move |r| (r, i)))
        .filter(|&(r, i)| matches_at(w, r, i))
        .collect()
}

/// Rewrites the redex of `rule` at `i`, or `None` if there is none there.
pub fn apply_at(w: &[usize], rule: Rule, i: usize) -> Option<Vec<usize>> {
    if i >= w.len() || !matches_at(w, rule, i) {
        return None;
    }
    let mut out = w[..i].to_vec();
    let tail = match rule {
        Rule::Cancel => i + 2,
        Rule::Swap => {
            out.extend([w[i + 1], w[i]]);
            i + 2
        }
        Rule::Braid => {
            let len = braid_len(w, i).expect("matched");
            out.push(w[i] - 1);
            out.extend_from_slice(&w[i..i + len - 1]);
            i + len
        }
    };
    out.extend_from_slice(&w[tail..]);
    Some(out)
}

fn first_redex(w: &[usize]) -> Option<(Rule, usize)> {
    (0..w.len())
        .flat_map(|i| [Rule::Cancel, Rule::Swap, Rule::Braid].into_iter().map(move |r| (r, i)))
        .find(|&(r, i)| matches_at(w, r, i))
}

/// One reduction under the leftmost-first strategy, or `None` if `w` is
/// already normal.
pub fn step(w: &Word) -> Option<ReductionStep> {
    let (rule, position) = first_redex(&w.letters)?;
    let after = w.with_letters(apply_at(&w.letters, rule, position).expect("redex"));
    Some(ReductionStep { rule, position, before: w.clone(), after })
}

pub fn is_normal(w: &[usize]) -> bool {
    first_redex(w).is_none()
}

/// The normal form of `w`.
pub fn nf(w: &Word) -> Word {
    let mut cur = w.letters.clone();
    while let Some((rule, i)) = first_redex(&cur) {
        cur = apply_at(&cur, rule, i).expect("redex");
    }
    w.with_letters(cur)
}

/// Normalizes using `choose` to pick among the available redexes (given in
/// [`redexes`] order); every step taken is reported to `observe`.
pub fn nf_with(
    w: &Word,
    mut choose: impl FnMut(&[(Rule, usize)]) -> usize,
    mut observe: impl FnMut(&ReductionStep),
) -> Word {
    let mut cur = w.clone();
    loop {
        let options = redexes(&cur.letters);
        if options.is_empty() {
            return cur;
        }
        let (rule, position) = options[choose(&options) % options.len()];
        let after = cur.with_letters(apply_at(&cur.letters, rule, position).expect("redex"));
        let s = ReductionStep { rule, position, before: cur, after };
        observe(&s);
        cur = s.after;
    }
}

/// The arrangement reached from `[0, .., n]` by swapping positions `t` and
/// `t + 1` for each letter `t` in turn, read as `p(i) = L[i]`.
pub fn word_to_perm(w: &Word) -> Permutation {
    let mut l: Vec<usize> = (0..=w.degree).collect();
    for &t in &w.letters {
        l.swap(t, t + 1);
    }
    Permutation::from_table(l).expect("swaps preserve bijectivity")
}

pub fn word_mul(a: &Word, b: &Word) -> Result<Word, WordError> {
    if a.degree != b.degree {
        return Err(WordError::DegreeMismatch(a.degree, b.degree));
    }
    Ok(a.with_letters(a.letters.iter().chain(&b.letters).copied().collect()))
}

pub fn word_inv(w: &Word) -> Word {
    w.with_letters(w.letters.iter().rev().copied().collect())
}

/// Length first, then lexicographic.
pub fn shortlex_cmp(a: &[usize], b: &[usize]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

pub fn shortlex_lt(a: &[usize], b: &[usize]) -> bool {
    shortlex_cmp(a, b) == Ordering::Less
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(n: usize, l: &[usize]) -> Word {
        Word::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn swoop_runs() {
        assert_eq!(swoop(0, 5), vec![4, 3, 2, 1, 0]);
        assert_eq!(swoop(3, 0), Vec::<usize>::new());
        assert_eq!(swoop(2, 2), vec![3, 2]);
    }

    #[test]
    fn single_steps() {
        let s = step(&word(2, &[1, 1])).unwrap();
        assert_eq!((s.rule, s.after.letters()), (Rule::Cancel, &[][..]));
        let s = step(&word(4, &[3, 1])).unwrap();
        assert_eq!((s.rule, s.after.letters()), (Rule::Swap, &[1, 3][..]));
        let s = step(&word(5, &[4, 3, 2, 1, 0, 4])).unwrap();
        assert_eq!((s.rule, s.position, s.after.letters()), (Rule::Braid, 0, &[3, 4, 3, 2, 1, 0][..]));
        assert!(step(&word(3, &[0, 1, 0])).is_none());
        assert!(step(&word(3, &[2, 1])).is_none());
    }

    #[test]
    fn braid_needs_a_run_of_two() {
        assert_eq!(apply_at(&[1, 1], Rule::Braid, 0), None);
        assert_eq!(apply_at(&[1, 0, 1], Rule::Braid, 0), Some(vec![0, 1, 0]));
        assert_eq!(apply_at(&[2, 1, 0, 1], Rule::Braid, 0), None);
        assert_eq!(apply_at(&[2, 1, 0, 1], Rule::Braid, 1), Some(vec![2, 0, 1, 0]));
    }

    #[test]
    fn normal_forms() {
        assert_eq!(nf(&word(2, &[1, 0, 1, 1, 1])).letters(), &[0, 1, 0]);
        assert_eq!(nf(&word(2, &[1, 0, 1])).letters(), &[0, 1, 0]);
        assert!(nf(&word(3, &[])).is_empty());
        let w = word(4, &[1, 0]);
        assert!(nf(&word_mul(&w, &word_inv(&w)).unwrap()).is_empty());
    }

    #[test]
    fn permutation_action() {
        assert!(word_to_perm(&word(4, &[])).is_identity());
        assert_eq!(word_to_perm(&word(2, &[0, 1, 0])).table(), &[2, 1, 0]);
        assert_eq!(word_to_perm(&word(4, &[0, 1, 0, 3, 2])).table(), &[2, 1, 4, 0, 3]);
    }

    #[test]
    fn ordering_and_text() {
        assert!(shortlex_lt(&[], &[0]));
        assert!(shortlex_lt(&[5], &[0, 0]));
        assert!(shortlex_lt(&[0, 1], &[1, 0]));
        let w: Word = "n=4 [0,1,0,3,2]".parse().unwrap();
        assert_eq!(w, word(4, &[0, 1, 0, 3, 2]));
        assert_eq!(w.to_string(), "n=4 [0,1,0,3,2]");
        assert_eq!("n=3 []".parse::<Word>().unwrap(), Word::empty(3));
        assert!(matches!("n=2 [2]".parse::<Word>(), Err(WordError::LetterOutOfRange { .. })));
        assert!(matches!("[0]".parse::<Word>(), Err(WordError::Syntax(_))));
        assert!(word_mul(&word(2, &[]), &word(3, &[])).is_err());
    }
}
