//! Level-2 combinators: equations between programs of the same type.

use std::fmt;

use thiserror::Error;

use super::{Comb, PiType, Prim, TypeError};
use PiType as T;

/// Axiom schemas. Each takes some combinator and type parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomFamily {
    AssocSeqL,
    AssocSeqR,
    AssoclPlusL,
    AssoclPlusR,
    AssocrPlusR,
    AssocrPlusL,
    IdlSeqL,
    IdlSeqR,
    IdrSeqL,
    IdrSeqR,
    LinvL,
    LinvR,
    RinvL,
    RinvR,
    UnitePlusLL,
    UnitePlusLR,
    UnitiPlusLL,
    UnitiPlusLR,
    SwaplPlus,
    SwaprPlus,
    IdPlusId,
    SplitPlus,
    HomPlusSeq,
    HomSeqPlus,
    TriangleL,
    TriangleR,
    PentagonL,
    PentagonR,
    UniteCohL,
    UniteCohR,
    HexagonrL,
    HexagonrR,
    HexagonlL,
    HexagonlR,
}

impl AxiomFamily {
    pub const ALL: [AxiomFamily; 34] = [
        AxiomFamily::AssocSeqL,
        AxiomFamily::AssocSeqR,
        AxiomFamily::AssoclPlusL,
        AxiomFamily::AssoclPlusR,
        AxiomFamily::AssocrPlusR,
        AxiomFamily::AssocrPlusL,
        AxiomFamily::IdlSeqL,
        AxiomFamily::IdlSeqR,
        AxiomFamily::IdrSeqL,
        AxiomFamily::IdrSeqR,
        AxiomFamily::LinvL,
        AxiomFamily::LinvR,
        AxiomFamily::RinvL,
        AxiomFamily::RinvR,
        AxiomFamily::UnitePlusLL,
        AxiomFamily::UnitePlusLR,
        AxiomFamily::UnitiPlusLL,
        AxiomFamily::UnitiPlusLR,
        AxiomFamily::SwaplPlus,
        AxiomFamily::SwaprPlus,
        AxiomFamily::IdPlusId,
        AxiomFamily::SplitPlus,
        AxiomFamily::HomPlusSeq,
        AxiomFamily::HomSeqPlus,
        AxiomFamily::TriangleL,
        AxiomFamily::TriangleR,
        AxiomFamily::PentagonL,
        AxiomFamily::PentagonR,
        AxiomFamily::UniteCohL,
        AxiomFamily::UniteCohR,
        AxiomFamily::HexagonrL,
        AxiomFamily::HexagonrR,
        AxiomFamily::HexagonlL,
        AxiomFamily::HexagonlR,
    ];

    pub fn name(self) -> &'static str {
        use AxiomFamily::*;
        match self {
            AssocSeqL => "assoc;l",
            AssocSeqR => "assoc;r",
            AssoclPlusL => "assocl+l",
            AssoclPlusR => "assocl+r",
            AssocrPlusR => "assocr+r",
            AssocrPlusL => "assocr+l",
            IdlSeqL => "idl;l",
            IdlSeqR => "idl;r",
            IdrSeqL => "idr;l",
            IdrSeqR => "idr;r",
            LinvL => "linv;l",
            LinvR => "linv;r",
            RinvL => "rinv;l",
            RinvR => "rinv;r",
            UnitePlusLL => "unite+l<->l",
            UnitePlusLR => "unite+l<->r",
            UnitiPlusLL => "uniti+l<->l",
            UnitiPlusLR => "uniti+l<->r",
            SwaplPlus => "swapl+",
            SwaprPlus => "swapr+",
            IdPlusId => "id(+)id",
            SplitPlus => "split(+)",
            HomPlusSeq => "hom(+);",
            HomSeqPlus => "hom;(+)",
            TriangleL => "triangle+l",
            TriangleR => "triangle+r",
            PentagonL => "pentagon+l",
            PentagonR => "pentagon+r",
            UniteCohL => "unite+l-coh-l",
            UniteCohR => "unite+l-coh-r",
            HexagonrL => "hexagonr+l",
            HexagonrR => "hexagonr+r",
            HexagonlL => "hexagonl+l",
            HexagonlR => "hexagonl+r",
        }
    }

    /// Number of combinator and type parameters.
    pub fn arity(self) -> (usize, usize) {
        use AxiomFamily::*;
        match self {
            AssocSeqL | AssocSeqR | AssoclPlusL | AssoclPlusR | AssocrPlusR | AssocrPlusL => (3, 0),
            IdlSeqL | IdlSeqR | IdrSeqL | IdrSeqR | LinvL | LinvR | RinvL | RinvR => (1, 0),
            UnitePlusLL | UnitePlusLR | UnitiPlusLL | UnitiPlusLR | SwaplPlus | SwaprPlus => (2, 0),
            HomPlusSeq | HomSeqPlus => (4, 0),
            IdPlusId | SplitPlus | TriangleL | TriangleR => (0, 2),
            PentagonL | PentagonR => (0, 4),
            UniteCohL | UniteCohR => (0, 1),
            HexagonrL | HexagonrR | HexagonlL | HexagonlR => (0, 3),
        }
    }

    /// The family stating the same equation right to left.
    pub fn flipped(self) -> AxiomFamily {
        use AxiomFamily::*;
        match self {
            AssocSeqL => AssocSeqR,
            AssocSeqR => AssocSeqL,
            AssoclPlusL => AssoclPlusR,
            AssoclPlusR => AssoclPlusL,
            AssocrPlusR => AssocrPlusL,
            AssocrPlusL => AssocrPlusR,
            IdlSeqL => IdlSeqR,
            IdlSeqR => IdlSeqL,
            IdrSeqL => IdrSeqR,
            IdrSeqR => IdrSeqL,
            LinvL => LinvR,
            LinvR => LinvL,
            RinvL => RinvR,
            RinvR => RinvL,
            UnitePlusLL => UnitePlusLR,
            UnitePlusLR => UnitePlusLL,
            UnitiPlusLL => UnitiPlusLR,
            UnitiPlusLR => UnitiPlusLL,
            SwaplPlus => SwaprPlus,
            SwaprPlus => SwaplPlus,
            IdPlusId => SplitPlus,
            SplitPlus => IdPlusId,
            HomPlusSeq => HomSeqPlus,
            HomSeqPlus => HomPlusSeq,
            TriangleL => TriangleR,
            TriangleR => TriangleL,
            PentagonL => PentagonR,
            PentagonR => PentagonL,
            UniteCohL => UniteCohR,
            UniteCohR => UniteCohL,
            HexagonrL => HexagonrR,
            HexagonrR => HexagonrL,
            HexagonlL => HexagonlR,
            HexagonlR => HexagonlL,
        }
    }

    /// Whether the family is stated left to right as listed; the others
    /// are mirror images.
    fn is_primary(self) -> bool {
        use AxiomFamily::*;
        matches!(
            self,
            AssocSeqL
                | AssoclPlusL
                | AssocrPlusR
                | IdlSeqL
                | IdrSeqL
                | LinvL
                | RinvL
                | UnitePlusLL
                | UnitiPlusLL
                | SwaplPlus
                | IdPlusId
                | HomPlusSeq
                | TriangleL
                | PentagonL
                | UniteCohL
                | HexagonrL
                | HexagonlL
        )
    }
}

impl fmt::Display for AxiomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A level-2 derivation: an axiom instance or a closure rule applied to
/// sub-derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Axiom2 {
    Instance { family: AxiomFamily, combs: Vec<Comb>, types: Vec<PiType> },
    /// `c <-> c`.
    Refl(Comb),
    /// Vertical composition; the middle programs must coincide.
    Trans(Box<Axiom2>, Box<Axiom2>),
    /// Horizontal composition under `;`.
    Horiz(Box<Axiom2>, Box<Axiom2>),
    /// Congruence under `(+)`.
    RespPlus(Box<Axiom2>, Box<Axiom2>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomError {
    #[error("{family} takes {expected:?} (combinators, types), got {got:?}")]
    Arity { family: AxiomFamily, expected: (usize, usize), got: (usize, usize) },
    #[error("{context}: {source}")]
    Type {
        context: String,
        #[source]
        source: TypeError,
    },
    #[error("{context}: sides have types {lhs:?} and {rhs:?}")]
    SideTypes { context: String, lhs: (PiType, PiType), rhs: (PiType, PiType) },
    #[error("vertical composition: first derivation ends at `{0}` but second starts at `{1}`")]
    TransMismatch(String, String),
}

fn prim(op: Prim, src: PiType) -> Result<Comb, TypeError> {
    Comb::prim(op, src)
}

fn id(t: PiType) -> Comb {
    Comb::id(t)
}

impl Axiom2 {
    pub fn instance(family: AxiomFamily, combs: Vec<Comb>, types: Vec<PiType>) -> Axiom2 {
        Axiom2::Instance { family, combs, types }
    }

    pub fn trans(a: Axiom2, b: Axiom2) -> Axiom2 {
        Axiom2::Trans(Box::new(a), Box::new(b))
    }

    pub fn horiz(a: Axiom2, b: Axiom2) -> Axiom2 {
        Axiom2::Horiz(Box::new(a), Box::new(b))
    }

    pub fn resp_plus(a: Axiom2, b: Axiom2) -> Axiom2 {
        Axiom2::RespPlus(Box::new(a), Box::new(b))
    }

    /// Immediate sub-derivations.
    pub fn premises(&self) -> Vec<&Axiom2> {
        match self {
            Axiom2::Instance { .. } | Axiom2::Refl(_) => Vec::new(),
            Axiom2::Trans(a, b) | Axiom2::Horiz(a, b) | Axiom2::RespPlus(a, b) => vec![a, b],
        }
    }

    /// The two programs equated, checked to be well-typed with equal types.
    pub fn sides(&self) -> Result<(Comb, Comb), AxiomError> {
        let (lhs, rhs, context) = match self {
            Axiom2::Instance { family, combs, types } => {
                let expected = family.arity();
                let got = (combs.len(), types.len());
                if expected != got {
                    return Err(AxiomError::Arity { family: *family, expected, got });
                }
                let context = family.name().to_string();
                let (l, r) = instantiate(*family, combs, types)
                    .map_err(|source| AxiomError::Type { context: context.clone(), source })?;
                (l, r, context)
            }
            Axiom2::Refl(c) => (c.clone(), c.clone(), "id<->2".to_string()),
            Axiom2::Trans(a, b) => {
                let (l1, r1) = a.sides()?;
                let (l2, r2) = b.sides()?;
                if r1 != l2 {
                    return Err(AxiomError::TransMismatch(r1.to_string(), l2.to_string()));
                }
                (l1, r2, "vertical composition".to_string())
            }
            Axiom2::Horiz(a, b) => {
                let (l1, r1) = a.sides()?;
                let (l2, r2) = b.sides()?;
                (Comb::seq(l1, l2), Comb::seq(r1, r2), "horizontal composition".to_string())
            }
            Axiom2::RespPlus(a, b) => {
                let (l1, r1) = a.sides()?;
                let (l2, r2) = b.sides()?;
                (Comb::plus(l1, l2), Comb::plus(r1, r2), "resp(+)".to_string())
            }
        };
        let tl = lhs.typecheck().map_err(|source| AxiomError::Type { context: context.clone(), source })?;
        let tr = rhs.typecheck().map_err(|source| AxiomError::Type { context: context.clone(), source })?;
        if tl != tr {
            return Err(AxiomError::SideTypes { context, lhs: tl, rhs: tr });
        }
        Ok((lhs, rhs))
    }
}

fn instantiate(family: AxiomFamily, cs: &[Comb], ts: &[PiType]) -> Result<(Comb, Comb), TypeError> {
    use AxiomFamily::*;
    if !family.is_primary() {
        let (l, r) = instantiate(family.flipped(), cs, ts)?;
        return Ok((r, l));
    }
    let seq = Comb::seq;
    let plus = Comb::plus;
    let c = |i: usize| cs[i].clone();
    let t = |i: usize| ts[i].clone();
    Ok(match family {
        AssocSeqL => (seq(c(0), seq(c(1), c(2))), seq(seq(c(0), c(1)), c(2))),
        AssoclPlusL => {
            let inner = plus(c(0), plus(c(1), c(2)));
            let l = seq(inner.clone(), prim(Prim::AssoclPlus, inner.target())?);
            let r = seq(prim(Prim::AssoclPlus, inner.source())?, plus(plus(c(0), c(1)), c(2)));
            (l, r)
        }
        AssocrPlusR => {
            let inner = plus(plus(c(0), c(1)), c(2));
            let l = seq(inner.clone(), prim(Prim::AssocrPlus, inner.target())?);
            let r = seq(prim(Prim::AssocrPlus, inner.source())?, plus(c(0), plus(c(1), c(2))));
            (l, r)
        }
        IdlSeqL => (seq(id(c(0).source()), c(0)), c(0)),
        IdrSeqL => (seq(c(0), id(c(0).target())), c(0)),
        LinvL => (seq(c(0), c(0).invert()), id(c(0).source())),
        RinvL => (seq(c(0).invert(), c(0)), id(c(0).target())),
        UnitePlusLL => {
            let l = seq(prim(Prim::UnitePlusL, T::sum(c(0).source(), c(1).source()))?, c(1));
            let r = seq(plus(c(0), c(1)), prim(Prim::UnitePlusL, T::sum(c(0).target(), c(1).target()))?);
            (l, r)
        }
        UnitiPlusLL => {
            let l = seq(prim(Prim::UnitiPlusL, c(1).source())?, plus(c(0), c(1)));
            let r = seq(c(1), prim(Prim::UnitiPlusL, c(1).target())?);
            (l, r)
        }
        SwaplPlus => {
            let l = seq(prim(Prim::SwapPlus, T::sum(c(1).source(), c(0).source()))?, plus(c(0), c(1)));
            let r = seq(plus(c(1), c(0)), prim(Prim::SwapPlus, T::sum(c(1).target(), c(0).target()))?);
            (l, r)
        }
        IdPlusId => (plus(id(t(0)), id(t(1))), id(T::sum(t(0), t(1)))),
        HomPlusSeq => (
            plus(seq(c(0), c(2)), seq(c(1), c(3))),
            seq(plus(c(0), c(1)), plus(c(2), c(3))),
        ),
        TriangleL => {
            let l = plus(prim(Prim::UnitePlusR, T::sum(t(0), T::Zero))?, id(t(1)));
            let src = T::sum(T::sum(t(0), T::Zero), t(1));
            let r = seq(prim(Prim::AssocrPlus, src)?, plus(id(t(0)), prim(Prim::UnitePlusL, T::sum(T::Zero, t(1)))?));
            (l, r)
        }
        PentagonL => {
            let (a, b, cc, d) = (t(0), t(1), t(2), t(3));
            let src = T::sum(T::sum(T::sum(a.clone(), b.clone()), cc.clone()), d.clone());
            let first = prim(Prim::AssocrPlus, src.clone())?;
            let l = seq(first.clone(), prim(Prim::AssocrPlus, first.target())?);
            let step1 = plus(prim(Prim::AssocrPlus, T::sum(T::sum(a.clone(), b.clone()), cc.clone()))?, id(d.clone()));
            let step2 = prim(Prim::AssocrPlus, step1.target())?;
            let step3 = plus(id(a), prim(Prim::AssocrPlus, T::sum(T::sum(b, cc), d))?);
            (l, seq(seq(step1, step2), step3))
        }
        UniteCohL => {
            let l = prim(Prim::UnitePlusL, T::sum(T::Zero, t(0)))?;
            let r = seq(prim(Prim::SwapPlus, T::sum(T::Zero, t(0)))?, prim(Prim::UnitePlusR, T::sum(t(0), T::Zero))?);
            (l, r)
        }
        HexagonrL => {
            let (a, b, cc) = (t(0), t(1), t(2));
            let src = T::sum(T::sum(a.clone(), b.clone()), cc.clone());
            let ar = prim(Prim::AssocrPlus, src)?;
            let sw = prim(Prim::SwapPlus, ar.target())?;
            let ar2 = prim(Prim::AssocrPlus, sw.target())?;
            let l = seq(seq(ar, sw), ar2);
            let s1 = plus(prim(Prim::SwapPlus, T::sum(a.clone(), b.clone()))?, id(cc.clone()));
            let s2 = prim(Prim::AssocrPlus, s1.target())?;
            let s3 = plus(id(b), prim(Prim::SwapPlus, T::sum(a, cc))?);
            (l, seq(seq(s1, s2), s3))
        }
        HexagonlL => {
            let (a, b, cc) = (t(0), t(1), t(2));
            let src = T::sum(a.clone(), T::sum(b.clone(), cc.clone()));
            let al = prim(Prim::AssoclPlus, src)?;
            let sw = prim(Prim::SwapPlus, al.target())?;
            let al2 = prim(Prim::AssoclPlus, sw.target())?;
            let l = seq(seq(al, sw), al2);
            let s1 = plus(id(a.clone()), prim(Prim::SwapPlus, T::sum(b.clone(), cc.clone()))?);
            let s2 = prim(Prim::AssoclPlus, s1.target())?;
            let s3 = plus(prim(Prim::SwapPlus, T::sum(a, cc))?, id(b));
            (l, seq(seq(s1, s2), s3))
        }
        _ => unreachable!("mirror families are handled above"),
    })
}

impl fmt::Display for Axiom2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axiom2::Instance { family, .. } => write!(f, "{family}"),
            Axiom2::Refl(_) => f.write_str("id<->2"),
            Axiom2::Trans(a, b) => write!(f, "({a} . {b})"),
            Axiom2::Horiz(a, b) => write!(f, "({a} [;] {b})"),
            Axiom2::RespPlus(a, b) => write!(f, "({a} [+] {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn swap2() -> Comb {
        prim(Prim::SwapPlus, T::two()).unwrap()
    }

    #[test]
    fn mirrors_swap_sides() {
        for fam in AxiomFamily::ALL {
            assert_eq!(fam.flipped().flipped(), fam);
            assert_ne!(fam.is_primary(), fam.flipped().is_primary(), "{fam}");
        }
    }

    #[test]
    fn triangle_sides_share_a_type() {
        let a = Axiom2::instance(AxiomFamily::TriangleL, vec![], vec![T::two(), T::two()]);
        let (l, r) = a.sides().unwrap();
        let src = T::sum(T::sum(T::two(), T::Zero), T::two());
        assert_eq!(l.source(), src);
        assert_eq!(r.typecheck().unwrap(), (src, T::sum(T::two(), T::two())));
    }

    #[test]
    fn arity_and_typing_errors() {
        let a = Axiom2::instance(AxiomFamily::IdlSeqL, vec![], vec![]);
        assert!(matches!(a.sides(), Err(AxiomError::Arity { .. })));
        let bad = Axiom2::instance(AxiomFamily::AssocSeqL, vec![swap2(), id(T::numeral(3)), swap2()], vec![]);
        assert!(matches!(bad.sides(), Err(AxiomError::Type { .. })));
        let not_zero = Axiom2::instance(AxiomFamily::UnitePlusLL, vec![swap2(), swap2()], vec![]);
        assert!(not_zero.sides().is_err());
    }

    #[test]
    fn closure_forms() {
        let idl = Axiom2::instance(AxiomFamily::IdlSeqL, vec![swap2()], vec![]);
        let idlr = Axiom2::instance(AxiomFamily::IdlSeqR, vec![swap2()], vec![]);
        let round = Axiom2::trans(idl.clone(), idlr.clone());
        let (l, r) = round.sides().unwrap();
        assert_eq!(l, r);
        assert!(Axiom2::trans(idl.clone(), idl.clone()).sides().is_err());
        let h = Axiom2::horiz(idl.clone(), Axiom2::Refl(swap2()));
        assert_eq!(h.sides().unwrap().1, Comb::seq(swap2(), swap2()));
        assert_eq!(Axiom2::resp_plus(idl, idlr).premises().len(), 2);
    }
}
