//! Boolean gates and wire reshuffling on `B n`.

use thiserror::Error;

use super::{Comb, PiType, Prim};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GateError {
    #[error("cif branches must share one type A <-> A, got {0} <-> {1} and {2} <-> {3}")]
    BranchTypes(PiType, PiType, PiType, PiType),
    #[error("wire ordering {0:?} is not a permutation of 0..{1}")]
    NotAPermutation(Vec<usize>, usize),
}

/// `B n`.
pub fn bits(n: usize) -> PiType {
    PiType::bits(n)
}

/// Negation: `swap+` on `2`.
pub fn x() -> Comb {
    Comb::Prim { op: Prim::SwapPlus, src: PiType::two(), tgt: PiType::two() }
}

/// Controlled negation on `B 2`.
pub fn cx() -> Comb {
    cif(x(), Comb::id(PiType::two())).expect("x and id share a type")
}

/// Toffoli on `B 3`.
pub fn ccx() -> Comb {
    cif(cx(), Comb::id(bits(2))).expect("cx and id share a type")
}

/// `dist ; ((id (*) c1) (+) (id (*) c2)) ; factor` on `2 * A`: runs `c1`
/// when the leading boolean is true and `c2` otherwise.
pub fn cif(c1: Comb, c2: Comb) -> Result<Comb, GateError> {
    let (s1, t1, s2, t2) = (c1.source(), c1.target(), c2.source(), c2.target());
    if s1 != t1 || s2 != t2 || s1 != s2 {
        return Err(GateError::BranchTypes(s1, t1, s2, t2));
    }
    let a = s1;
    let whole = PiType::prod(PiType::two(), a.clone());
    let branch = PiType::prod(PiType::One, a);
    let split = PiType::sum(branch.clone(), branch);
    let dist = Comb::Prim { op: Prim::Dist, src: whole.clone(), tgt: split.clone() };
    let factor = Comb::Prim { op: Prim::Factor, src: split, tgt: whole };
    let body = Comb::plus(
        Comb::times(Comb::id(PiType::One), c1),
        Comb::times(Comb::id(PiType::One), c2),
    );
    Ok(Comb::seq(dist, Comb::seq(body, factor)))
}

/// Exchanges wires `i` and `i + 1` of `B n`.
fn adjacent_swap(n: usize, i: usize) -> Comb {
    debug_assert!(i + 1 < n);
    let two = PiType::two;
    let local = if i + 2 == n {
        Comb::Prim { op: Prim::SwapStar, src: bits(2), tgt: bits(2) }
    } else {
        let rest = bits(n - i - 2);
        let pair = PiType::prod(two(), two());
        let assocl = Comb::prim(Prim::AssoclStar, bits(n - i)).expect("B n with n >= 3 is a triple product");
        let swap = Comb::times(
            Comb::Prim { op: Prim::SwapStar, src: pair.clone(), tgt: pair.clone() },
            Comb::id(rest.clone()),
        );
        let assocr = Comb::prim(Prim::AssocrStar, PiType::prod(pair, rest)).expect("well-formed");
        Comb::seq(assocl, Comb::seq(swap, assocr))
    };
    (0..i).fold(local, |c, _| Comb::times(Comb::id(two()), c))
}

/// A program on `B n` whose output wire `k` carries input wire `order[k]`.
pub fn wire_router(order: &[usize]) -> Result<Comb, GateError> {
    let n = order.len();
    let mut seen = vec![false; n];
    for &w in order {
        if w >= n || std::mem::replace(&mut seen[w], true) {
            return Err(GateError::NotAPermutation(order.to_vec(), n));
        }
    }
    let mut current: Vec<usize> = (0..n).collect();
    let mut steps = Vec::new();
    for (k, &wire) in order.iter().enumerate() {
        let mut j = current.iter().position(|&w| w == wire).expect("bijective");
        while j > k {
            current.swap(j - 1, j);
            steps.push(adjacent_swap(n, j - 1));
            j -= 1;
        }
    }
    Ok(Comb::seq_all(steps).unwrap_or_else(|| Comb::id(bits(n))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gate_types() {
        assert_eq!(x().typecheck().unwrap(), (PiType::two(), PiType::two()));
        assert_eq!(cx().typecheck().unwrap(), (bits(2), bits(2)));
        assert_eq!(ccx().typecheck().unwrap(), (bits(3), bits(3)));
    }

    #[test]
    fn cif_rejects_mismatched_branches() {
        assert!(cif(x(), Comb::id(bits(2))).is_err());
    }

    #[test]
    fn router_shapes() {
        assert_eq!(wire_router(&[0, 1, 2]).unwrap(), Comb::id(bits(3)));
        assert!(wire_router(&[0, 0, 2]).is_err());
        assert!(wire_router(&[0, 3, 1]).is_err());
        for order in [[1, 0, 2], [2, 0, 1], [2, 1, 0], [0, 2, 1]] {
            let r = wire_router(&order).unwrap();
            assert_eq!(r.typecheck().unwrap(), (bits(3), bits(3)), "{order:?}");
        }
        let r = wire_router(&[3, 1, 0, 2]).unwrap();
        assert_eq!(r.typecheck().unwrap(), (bits(4), bits(4)));
    }
}
