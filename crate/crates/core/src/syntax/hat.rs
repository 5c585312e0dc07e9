use std::fmt;

use thiserror::Error;

/// Skeletal programs over natural-number sizes, generated by the
/// transposition of the first two positions and by lifting past a
/// fixed first position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CombHat {
    /// Identity on `n` elements.
    Id(usize),
    /// Swaps positions 0 and 1 of `n >= 2` elements.
    Swap(usize),
    Seq(Box<CombHat>, Box<CombHat>),
    /// Acts on positions `1..`, keeping position 0 fixed.
    Lift(Box<CombHat>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HatError {
    #[error("swap needs at least two elements, got {0}")]
    SwapTooSmall(usize),
    #[error("sequence joins sizes {0} and {1}")]
    SizeMismatch(usize, usize),
}

impl CombHat {
    pub fn seq(a: CombHat, b: CombHat) -> CombHat {
        CombHat::Seq(Box::new(a), Box::new(b))
    }

    pub fn lift(c: CombHat) -> CombHat {
        CombHat::Lift(Box::new(c))
    }

    /// Applies [`CombHat::Lift`] `k` times.
    pub fn lift_n(c: CombHat, k: usize) -> CombHat {
        (0..k).fold(c, |c, _| CombHat::lift(c))
    }

    /// Size of the object acted upon, assuming well-formedness.
    pub fn size(&self) -> usize {
        match self {
            CombHat::Id(n) | CombHat::Swap(n) => *n,
            CombHat::Seq(a, _) => a.size(),
            CombHat::Lift(c) => 1 + c.size(),
        }
    }

    /// Checks well-formedness and returns the size.
    pub fn check(&self) -> Result<usize, HatError> {
        match self {
            CombHat::Id(n) => Ok(*n),
            CombHat::Swap(n) if *n >= 2 => Ok(*n),
            CombHat::Swap(n) => Err(HatError::SwapTooSmall(*n)),
            CombHat::Seq(a, b) => {
                let (m, n) = (a.check()?, b.check()?);
                if m == n {
                    Ok(m)
                } else {
                    Err(HatError::SizeMismatch(m, n))
                }
            }
            CombHat::Lift(c) => Ok(1 + c.check()?),
        }
    }

    /// The same program on `extra` more trailing elements, left untouched.
    pub fn widen(&self, extra: usize) -> CombHat {
        match self {
            CombHat::Id(n) => CombHat::Id(n + extra),
            CombHat::Swap(n) => CombHat::Swap(n + extra),
            CombHat::Seq(a, b) => CombHat::seq(a.widen(extra), b.widen(extra)),
            CombHat::Lift(c) => CombHat::lift(c.widen(extra)),
        }
    }
}

impl fmt::Display for CombHat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombHat::Id(n) => write!(f, "id@{n}"),
            CombHat::Swap(n) => write!(f, "swap@{n}"),
            CombHat::Seq(a, b) => {
                if matches!(**a, CombHat::Seq(..)) {
                    write!(f, "({a}) ; {b}")
                } else {
                    write!(f, "{a} ; {b}")
                }
            }
            CombHat::Lift(c) => write!(f, "lift({c})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_checks() {
        let c = CombHat::seq(CombHat::Swap(3), CombHat::lift(CombHat::Swap(2)));
        assert_eq!(c.check(), Ok(3));
        assert_eq!(CombHat::Swap(1).check(), Err(HatError::SwapTooSmall(1)));
        let bad = CombHat::seq(CombHat::Id(2), CombHat::Id(3));
        assert_eq!(bad.check(), Err(HatError::SizeMismatch(2, 3)));
        assert_eq!(CombHat::lift_n(CombHat::Swap(2), 3).size(), 5);
    }

    #[test]
    fn widen_pads_on_the_right() {
        let c = CombHat::lift(CombHat::Swap(2)).widen(2);
        assert_eq!(c, CombHat::lift(CombHat::Swap(4)));
        assert_eq!(c.check(), Ok(5));
    }
}
