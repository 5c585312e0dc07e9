//! Lehmer codes: permutations as inversion counts, and the normal-form
//! words they name.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::coxeter::{swoop, Word};
use crate::permutation::Permutation;

/// Digits `d_0 .. d_n` with `d_i <= i`. The empty code stands for the
/// permutation of no elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LehmerCode {
    digits: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LehmerError {
    #[error("digit {digit} at index {index} exceeds {index}")]
    DigitTooLarge { index: usize, digit: usize },
    #[error("malformed code `{0}`; expected e.g. `(0,1,2,0,2)`")]
    Syntax(String),
}

impl LehmerCode {
    pub fn new(digits: Vec<usize>) -> Result<LehmerCode, LehmerError> {
        if let Some((index, &digit)) = digits.iter().enumerate().find(|(i, &d)| d > *i) {
            return Err(LehmerError::DigitTooLarge { index, digit });
        }
        Ok(LehmerCode { digits })
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    /// Number of elements permuted.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// All codes with `n` digits, in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = LehmerCode> {
        let total: usize = (1..=n).product();
        (0..total).map(move |mut rank| {
            let mut digits = vec![0; n];
            for i in (1..n).rev() {
                digits[i] = rank % (i + 1);
                rank /= i + 1;
            }
            LehmerCode { digits }
        })
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for LehmerCode {
    type Err = LehmerError;

    fn from_str(s: &str) -> Result<LehmerCode, LehmerError> {
        let bad = || LehmerError::Syntax(s.trim().to_string());
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let digits = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
        };
        LehmerCode::new(digits)
    }
}

/// Digit `i` counts the values `j < i` that appear after `i` in the
/// one-line form of `p`.
pub fn encode(p: &Permutation) -> LehmerCode {
    let pos = p.inverse();
    let digits = (0..p.len()).map(|i| (0..i).filter(|&j| pos.apply(j) > pos.apply(i)).count()).collect();
    LehmerCode { digits }
}

/// Inverse of [`encode`].
pub fn decode(c: &LehmerCode) -> Permutation {
    let trace = decode_trace(c);
    let last = trace.last().cloned().unwrap_or_else(|| (0..c.len()).collect());
    Permutation::from_table(last).expect("insertion keeps a bijection")
}

/// The arrangement after each insertion step `k = 1 .. n`: starting from
/// the sorted list, value `k` is moved `d_k` places to the left.
pub fn decode_trace(c: &LehmerCode) -> Vec<Vec<usize>> {
    let mut l: Vec<usize> = (0..c.len()).collect();
    let mut rows = Vec::new();
    for k in 1..c.len() {
        let at = l.iter().position(|&v| v == k).expect("value present");
        let v = l.remove(at);
        l.insert(at - c.digits[k], v);
        rows.push(l.clone());
    }
    rows
}

/// The normal-form word named by a code: for each `k`, the run
/// `[k-1, .., k-d_k]`.
pub fn em(c: &LehmerCode) -> Word {
    let degree = c.len().saturating_sub(1);
    let letters = c.digits.iter().enumerate().skip(1).flat_map(|(k, &d)| swoop(k - d, d)).collect();
    Word::new(degree, letters).expect("letters below the degree")
}

/// The normal-form word whose action is `p`.
pub fn perm_to_word(p: &Permutation) -> Word {
    em(&encode(p))
}
