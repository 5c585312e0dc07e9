use std::fmt;

/// Finite types built from `0`, `1`, `+` and `*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PiType {
    Zero,
    One,
    Sum(Box<PiType>, Box<PiType>),
    Prod(Box<PiType>, Box<PiType>),
}

impl PiType {
    pub fn sum(a: PiType, b: PiType) -> PiType {
        PiType::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: PiType, b: PiType) -> PiType {
        PiType::Prod(Box::new(a), Box::new(b))
    }

    /// Booleans, `1 + 1`. `inl tt` is true.
    pub fn two() -> PiType {
        PiType::sum(PiType::One, PiType::One)
    }

    /// `B n`: the right-nested product of `n` booleans. `B 0` is `1`.
    pub fn bits(n: usize) -> PiType {
        match n {
            0 => PiType::One,
            1 => PiType::two(),
            _ => PiType::prod(PiType::two(), PiType::bits(n - 1)),
        }
    }

    /// The numeral `n`: `0`, `1`, `1 + 1`, `1 + (1 + 1)`, ...
    pub fn numeral(n: usize) -> PiType {
        match n {
            0 => PiType::Zero,
            1 => PiType::One,
            _ => PiType::sum(PiType::One, PiType::numeral(n - 1)),
        }
    }

    /// The skeletal type `1 + (1 + (... + 0))` with `n` ones.
    pub fn ones(n: usize) -> PiType {
        (0..n).fold(PiType::Zero, |acc, _| PiType::sum(PiType::One, acc))
    }

    /// Number of inhabitants.
    pub fn size(&self) -> usize {
        match self {
            PiType::Zero => 0,
            PiType::One => 1,
            PiType::Sum(a, b) => a.size() + b.size(),
            PiType::Prod(a, b) => a.size() * b.size(),
        }
    }

    /// True when the type contains no product.
    pub fn is_additive(&self) -> bool {
        match self {
            PiType::Zero | PiType::One => true,
            PiType::Sum(a, b) => a.is_additive() && b.is_additive(),
            PiType::Prod(..) => false,
        }
    }

    /// If this type is exactly `B n` for some `n >= 1`, returns `n`.
    pub fn bit_width(&self) -> Option<usize> {
        if *self == PiType::two() {
            return Some(1);
        }
        match self {
            PiType::Prod(a, b) if **a == PiType::two() => b.bit_width().map(|n| n + 1),
            _ => None,
        }
    }

    fn as_numeral(&self) -> Option<usize> {
        match self {
            PiType::Zero => Some(0),
            PiType::One => Some(1),
            PiType::Sum(a, b) if **a == PiType::One => match b.as_numeral()? {
                0 => None,
                n => Some(n + 1),
            },
            _ => None,
        }
    }
}

// Precedence: sums bind loosest, products tighter; both associate to the right.
fn write_ty(f: &mut fmt::Formatter<'_>, t: &PiType, prec: u8) -> fmt::Result {
    if let Some(n) = t.bit_width().filter(|&n| n >= 2) {
        return write!(f, "B{n}");
    }
    if let Some(n) = t.as_numeral() {
        return write!(f, "{n}");
    }
    match t {
        PiType::Zero | PiType::One => unreachable!("handled as numerals"),
        PiType::Sum(a, b) => {
            if prec > 0 {
                f.write_str("(")?;
            }
            write_ty(f, a, 1)?;
            f.write_str(" + ")?;
            write_ty(f, b, 0)?;
            if prec > 0 {
                f.write_str(")")?;
            }
            Ok(())
        }
        PiType::Prod(a, b) => {
            if prec > 1 {
                f.write_str("(")?;
            }
            write_ty(f, a, 2)?;
            f.write_str(" * ")?;
            write_ty(f, b, 1)?;
            if prec > 1 {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

impl fmt::Display for PiType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_ty(f, self, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(PiType::Zero.size(), 0);
        assert_eq!(PiType::two().size(), 2);
        assert_eq!(PiType::bits(3).size(), 8);
        assert_eq!(PiType::ones(5).size(), 5);
        let t = PiType::prod(PiType::sum(PiType::One, PiType::Zero), PiType::numeral(3));
        assert_eq!(t.size(), 3);
    }

    #[test]
    fn display_uses_sugar() {
        assert_eq!(PiType::bits(3).to_string(), "B3");
        assert_eq!(PiType::two().to_string(), "2");
        assert_eq!(PiType::ones(2).to_string(), "1 + 1 + 0");
        let t = PiType::prod(PiType::sum(PiType::One, PiType::Zero), PiType::One);
        assert_eq!(t.to_string(), "(1 + 0) * 1");
        let t = PiType::sum(PiType::sum(PiType::One, PiType::Zero), PiType::Zero);
        assert_eq!(t.to_string(), "(1 + 0) + 0");
    }

    #[test]
    fn bit_width_recognizes_only_right_nested_products() {
        assert_eq!(PiType::bits(4).bit_width(), Some(4));
        let left = PiType::prod(PiType::prod(PiType::two(), PiType::two()), PiType::two());
        assert_eq!(left.bit_width(), None);
    }
}
