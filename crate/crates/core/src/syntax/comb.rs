use thiserror::Error;

use super::unify::{schema, Subst, TyTerm};
use super::PiType;

/// Primitive level-1 combinators. Each has a partner, see [`Prim::inverse`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Prim {
    Id,
    UnitePlusL,
    UnitiPlusL,
    UnitePlusR,
    UnitiPlusR,
    SwapPlus,
    AssoclPlus,
    AssocrPlus,
    UniteStarL,
    UnitiStarL,
    UniteStarR,
    UnitiStarR,
    SwapStar,
    AssoclStar,
    AssocrStar,
    Absorbr,
    Factorzl,
    Absorbl,
    Factorzr,
    Dist,
    Factor,
}

impl Prim {
    pub const ALL: [Prim; 21] = [
        Prim::Id,
        Prim::UnitePlusL,
        Prim::UnitiPlusL,
        Prim::UnitePlusR,
        Prim::UnitiPlusR,
        Prim::SwapPlus,
        Prim::AssoclPlus,
        Prim::AssocrPlus,
        Prim::UniteStarL,
        Prim::UnitiStarL,
        Prim::UniteStarR,
        Prim::UnitiStarR,
        Prim::SwapStar,
        Prim::AssoclStar,
        Prim::AssocrStar,
        Prim::Absorbr,
        Prim::Factorzl,
        Prim::Absorbl,
        Prim::Factorzr,
        Prim::Dist,
        Prim::Factor,
    ];

    /// Surface name.
    pub fn name(self) -> &'static str {
        match self {
            Prim::Id => "id",
            Prim::UnitePlusL => "unite+l",
            Prim::UnitiPlusL => "uniti+l",
            Prim::UnitePlusR => "unite+r",
            Prim::UnitiPlusR => "uniti+r",
            Prim::SwapPlus => "swap+",
            Prim::AssoclPlus => "assocl+",
            Prim::AssocrPlus => "assocr+",
            Prim::UniteStarL => "unite*l",
            Prim::UnitiStarL => "uniti*l",
            Prim::UniteStarR => "unite*r",
            Prim::UnitiStarR => "uniti*r",
            Prim::SwapStar => "swap*",
            Prim::AssoclStar => "assocl*",
            Prim::AssocrStar => "assocr*",
            Prim::Absorbr => "absorbr",
            Prim::Factorzl => "factorzl",
            Prim::Absorbl => "absorbl",
            Prim::Factorzr => "factorzr",
            Prim::Dist => "dist",
            Prim::Factor => "factor",
        }
    }

    pub fn from_name(name: &str) -> Option<Prim> {
        Prim::ALL.into_iter().find(|p| p.name() == name)
    }

    pub fn inverse(self) -> Prim {
        match self {
            Prim::Id => Prim::Id,
            Prim::UnitePlusL => Prim::UnitiPlusL,
            Prim::UnitiPlusL => Prim::UnitePlusL,
            Prim::UnitePlusR => Prim::UnitiPlusR,
            Prim::UnitiPlusR => Prim::UnitePlusR,
            Prim::SwapPlus => Prim::SwapPlus,
            Prim::AssoclPlus => Prim::AssocrPlus,
            Prim::AssocrPlus => Prim::AssoclPlus,
            Prim::UniteStarL => Prim::UnitiStarL,
            Prim::UnitiStarL => Prim::UniteStarL,
            Prim::UniteStarR => Prim::UnitiStarR,
            Prim::UnitiStarR => Prim::UniteStarR,
            Prim::SwapStar => Prim::SwapStar,
            Prim::AssoclStar => Prim::AssocrStar,
            Prim::AssocrStar => Prim::AssoclStar,
            Prim::Absorbr => Prim::Factorzl,
            Prim::Factorzl => Prim::Absorbr,
            Prim::Absorbl => Prim::Factorzr,
            Prim::Factorzr => Prim::Absorbl,
            Prim::Dist => Prim::Factor,
            Prim::Factor => Prim::Dist,
        }
    }

    /// Primitives whose target is not determined by their source.
    pub fn target_underdetermined(self) -> bool {
        matches!(self, Prim::Factorzl | Prim::Factorzr)
    }

    /// Checks `src <-> tgt` against the primitive's typing schema.
    pub fn admits(self, src: &PiType, tgt: &PiType) -> bool {
        let mut s = Subst::default();
        let (a, b) = schema(self, &mut s);
        s.unify(&a, &TyTerm::from(src)) && s.unify(&b, &TyTerm::from(tgt))
    }
}

/// A level-1 program. Primitive leaves carry their instantiated type.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Comb {
    Prim { op: Prim, src: PiType, tgt: PiType },
    Seq(Box<Comb>, Box<Comb>),
    Plus(Box<Comb>, Box<Comb>),
    Times(Box<Comb>, Box<Comb>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TypeError {
    #[error("`{op}` cannot have type {src} <-> {tgt}")]
    BadPrimitive { op: &'static str, src: PiType, tgt: PiType },
    #[error("`{op}` does not apply to source type {src}")]
    NoInstance { op: &'static str, src: PiType },
    #[error("type of `{op}` at source {src} is ambiguous; give its target")]
    Underdetermined { op: &'static str, src: PiType },
    #[error("in `{term}`: left side produces {left} but right side expects {right}")]
    SeqMismatch { term: String, left: PiType, right: PiType },
}

impl Comb {
    pub fn id(t: PiType) -> Comb {
        Comb::Prim { op: Prim::Id, tgt: t.clone(), src: t }
    }

    /// Instantiates `op` at `src`, inferring the target.
    pub fn prim(op: Prim, src: PiType) -> Result<Comb, TypeError> {
        let mut s = Subst::default();
        let (a, b) = schema(op, &mut s);
        if !s.unify(&a, &TyTerm::from(&src)) {
            return Err(TypeError::NoInstance { op: op.name(), src });
        }
        match s.resolve(&b) {
            Some(tgt) => Ok(Comb::Prim { op, src, tgt }),
            None => Err(TypeError::Underdetermined { op: op.name(), src }),
        }
    }

    /// Instantiates `op` at an explicit type.
    pub fn prim_at(op: Prim, src: PiType, tgt: PiType) -> Result<Comb, TypeError> {
        if op.admits(&src, &tgt) {
            Ok(Comb::Prim { op, src, tgt })
        } else {
            Err(TypeError::BadPrimitive { op: op.name(), src, tgt })
        }
    }

    pub fn seq(a: Comb, b: Comb) -> Comb {
        Comb::Seq(Box::new(a), Box::new(b))
    }

    pub fn plus(a: Comb, b: Comb) -> Comb {
        Comb::Plus(Box::new(a), Box::new(b))
    }

    pub fn times(a: Comb, b: Comb) -> Comb {
        Comb::Times(Box::new(a), Box::new(b))
    }

    /// Right-nested sequence of the given steps; `None` if empty.
    pub fn seq_all(steps: impl IntoIterator<Item = Comb>) -> Option<Comb> {
        let mut steps: Vec<Comb> = steps.into_iter().collect();
        let mut acc = steps.pop()?;
        while let Some(c) = steps.pop() {
            acc = Comb::seq(c, acc);
        }
        Some(acc)
    }

    /// Source type, read off the annotations without checking.
    pub fn source(&self) -> PiType {
        match self {
            Comb::Prim { src, .. } => src.clone(),
            Comb::Seq(a, _) => a.source(),
            Comb::Plus(a, b) => PiType::sum(a.source(), b.source()),
            Comb::Times(a, b) => PiType::prod(a.source(), b.source()),
        }
    }

    /// Target type, read off the annotations without checking.
    pub fn target(&self) -> PiType {
        match self {
            Comb::Prim { tgt, .. } => tgt.clone(),
            Comb::Seq(_, b) => b.target(),
            Comb::Plus(a, b) => PiType::sum(a.target(), b.target()),
            Comb::Times(a, b) => PiType::prod(a.target(), b.target()),
        }
    }

    pub fn typecheck(&self) -> Result<(PiType, PiType), TypeError> {
        match self {
            Comb::Prim { op, src, tgt } => {
                if op.admits(src, tgt) {
                    Ok((src.clone(), tgt.clone()))
                } else {
                    Err(TypeError::BadPrimitive { op: op.name(), src: src.clone(), tgt: tgt.clone() })
                }
            }
            Comb::Seq(a, b) => {
                let (s, m1) = a.typecheck()?;
                let (m2, t) = b.typecheck()?;
                if m1 != m2 {
                    return Err(TypeError::SeqMismatch {
                        term: super::print::abbreviate(self),
                        left: m1,
                        right: m2,
                    });
                }
                Ok((s, t))
            }
            Comb::Plus(a, b) => {
                let (s1, t1) = a.typecheck()?;
                let (s2, t2) = b.typecheck()?;
                Ok((PiType::sum(s1, s2), PiType::sum(t1, t2)))
            }
            Comb::Times(a, b) => {
                let (s1, t1) = a.typecheck()?;
                let (s2, t2) = b.typecheck()?;
                Ok((PiType::prod(s1, s2), PiType::prod(t1, t2)))
            }
        }
    }

    /// The inverse program: primitives swap with their partners and
    /// sequencing reverses.
    pub fn invert(&self) -> Comb {
        match self {
            Comb::Prim { op, src, tgt } => Comb::Prim { op: op.inverse(), src: tgt.clone(), tgt: src.clone() },
            Comb::Seq(a, b) => Comb::seq(b.invert(), a.invert()),
            Comb::Plus(a, b) => Comb::plus(a.invert(), b.invert()),
            Comb::Times(a, b) => Comb::times(a.invert(), b.invert()),
        }
    }

    /// Number of nodes.
    pub fn node_count(&self) -> usize {
        match self {
            Comb::Prim { .. } => 1,
            Comb::Seq(a, b) | Comb::Plus(a, b) | Comb::Times(a, b) => 1 + a.node_count() + b.node_count(),
        }
    }
}
