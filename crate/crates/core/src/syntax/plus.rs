use std::fmt;

use thiserror::Error;

use super::{Comb, PiType, Prim, TypeError};

/// Primitives of the additive fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PlusPrim {
    Id,
    UnitePlus,
    UnitiPlus,
    SwapPlus,
    AssoclPlus,
    AssocrPlus,
}

impl PlusPrim {
    pub fn to_prim(self) -> Prim {
        match self {
            PlusPrim::Id => Prim::Id,
            PlusPrim::UnitePlus => Prim::UnitePlusL,
            PlusPrim::UnitiPlus => Prim::UnitiPlusL,
            PlusPrim::SwapPlus => Prim::SwapPlus,
            PlusPrim::AssoclPlus => Prim::AssoclPlus,
            PlusPrim::AssocrPlus => Prim::AssocrPlus,
        }
    }

    pub fn inverse(self) -> PlusPrim {
        match self {
            PlusPrim::UnitePlus => PlusPrim::UnitiPlus,
            PlusPrim::UnitiPlus => PlusPrim::UnitePlus,
            PlusPrim::AssoclPlus => PlusPrim::AssocrPlus,
            PlusPrim::AssocrPlus => PlusPrim::AssoclPlus,
            p => p,
        }
    }
}

/// A program of the additive fragment: no products anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CombPlus {
    Prim { op: PlusPrim, src: PiType, tgt: PiType },
    Seq(Box<CombPlus>, Box<CombPlus>),
    Plus(Box<CombPlus>, Box<CombPlus>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PlusTypeError {
    #[error("type {0} is not additive")]
    NotAdditive(PiType),
    #[error(transparent)]
    Type(#[from] TypeError),
}

impl CombPlus {
    pub fn id(t: PiType) -> CombPlus {
        CombPlus::Prim { op: PlusPrim::Id, tgt: t.clone(), src: t }
    }

    /// Instantiates `op` at `src`, inferring the target.
    pub fn prim(op: PlusPrim, src: PiType) -> Result<CombPlus, PlusTypeError> {
        if !src.is_additive() {
            return Err(PlusTypeError::NotAdditive(src));
        }
        match Comb::prim(op.to_prim(), src)? {
            Comb::Prim { src, tgt, .. } => Ok(CombPlus::Prim { op, src, tgt }),
            _ => unreachable!(),
        }
    }

    pub fn seq(a: CombPlus, b: CombPlus) -> CombPlus {
        CombPlus::Seq(Box::new(a), Box::new(b))
    }

    pub fn plus(a: CombPlus, b: CombPlus) -> CombPlus {
        CombPlus::Plus(Box::new(a), Box::new(b))
    }

    pub fn source(&self) -> PiType {
        match self {
            CombPlus::Prim { src, .. } => src.clone(),
            CombPlus::Seq(a, _) => a.source(),
            CombPlus::Plus(a, b) => PiType::sum(a.source(), b.source()),
        }
    }

    pub fn target(&self) -> PiType {
        match self {
            CombPlus::Prim { tgt, .. } => tgt.clone(),
            CombPlus::Seq(_, b) => b.target(),
            CombPlus::Plus(a, b) => PiType::sum(a.target(), b.target()),
        }
    }

    /// Embeds into the full language.
    pub fn to_comb(&self) -> Comb {
        match self {
            CombPlus::Prim { op, src, tgt } => Comb::Prim { op: op.to_prim(), src: src.clone(), tgt: tgt.clone() },
            CombPlus::Seq(a, b) => Comb::seq(a.to_comb(), b.to_comb()),
            CombPlus::Plus(a, b) => Comb::plus(a.to_comb(), b.to_comb()),
        }
    }

    pub fn typecheck(&self) -> Result<(PiType, PiType), PlusTypeError> {
        let (s, t) = self.to_comb().typecheck()?;
        for ty in [&s, &t] {
            if !ty.is_additive() {
                return Err(PlusTypeError::NotAdditive(ty.clone()));
            }
        }
        Ok((s, t))
    }

    pub fn invert(&self) -> CombPlus {
        match self {
            CombPlus::Prim { op, src, tgt } => CombPlus::Prim { op: op.inverse(), src: tgt.clone(), tgt: src.clone() },
            CombPlus::Seq(a, b) => CombPlus::seq(b.invert(), a.invert()),
            CombPlus::Plus(a, b) => CombPlus::plus(a.invert(), b.invert()),
        }
    }
}

impl fmt::Display for CombPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_comb(), f)
    }
}
