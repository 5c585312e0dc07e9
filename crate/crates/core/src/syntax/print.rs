use std::fmt;

use super::Comb;

const SEQ: u8 = 1;
const PLUS: u8 = 2;
const TIMES: u8 = 3;

fn write_comb(f: &mut fmt::Formatter<'_>, c: &Comb, prec: u8) -> fmt::Result {
    let (op, level, a, b) = match c {
        Comb::Prim { op, src, tgt } => {
            // The only primitives whose type is not forced by their source.
            return if op.target_underdetermined() {
                write!(f, "({} : {} <-> {})", op.name(), src, tgt)
            } else {
                f.write_str(op.name())
            };
        }
        Comb::Seq(a, b) => (" ; ", SEQ, a, b),
        Comb::Plus(a, b) => (" (+) ", PLUS, a, b),
        Comb::Times(a, b) => (" (*) ", TIMES, a, b),
    };
    if prec > level {
        f.write_str("(")?;
    }
    write_comb(f, a, level + 1)?;
    f.write_str(op)?;
    write_comb(f, b, level)?;
    if prec > level {
        f.write_str(")")?;
    }
    Ok(())
}

impl fmt::Display for Comb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comb(f, self, 0)
    }
}

/// `c : A <-> B`, which parses back to the same program.
pub fn print_comb(c: &Comb) -> String {
    format!("{} : {} <-> {}", c, c.source(), c.target())
}

/// `name : A <-> B = c`.
pub fn print_definition(name: &str, c: &Comb) -> String {
    format!("{} : {} <-> {} = {}", name, c.source(), c.target(), c)
}

/// Short rendering for diagnostics.
pub(crate) fn abbreviate(c: &Comb) -> String {
    const LIMIT: usize = 80;
    let s = c.to_string();
    if s.chars().count() <= LIMIT {
        s
    } else {
        let mut t: String = s.chars().take(LIMIT).collect();
        t.push_str("...");
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{PiType, Prim};

    #[test]
    fn precedence_and_association() {
        let s = Comb::prim(Prim::SwapPlus, PiType::two()).unwrap();
        let i = Comb::id(PiType::two());
        let left = Comb::seq(Comb::seq(s.clone(), i.clone()), s.clone());
        assert_eq!(left.to_string(), "(swap+ ; id) ; swap+");
        let right = Comb::seq(s.clone(), Comb::seq(i.clone(), s.clone()));
        assert_eq!(right.to_string(), "swap+ ; id ; swap+");
        let mixed = Comb::plus(Comb::seq(s.clone(), i.clone()), Comb::times(i.clone(), s.clone()));
        assert_eq!(mixed.to_string(), "(swap+ ; id) (+) id (*) swap+");
        let nested = Comb::times(Comb::plus(i.clone(), s.clone()), i);
        assert_eq!(nested.to_string(), "(id (+) swap+) (*) id");
    }

    #[test]
    fn underdetermined_primitives_carry_their_type() {
        let c = Comb::prim_at(Prim::Factorzr, PiType::Zero, PiType::prod(PiType::two(), PiType::Zero)).unwrap();
        assert_eq!(c.to_string(), "(factorzr : 0 <-> 2 * 0)");
    }
}
