//! Normalization by evaluation, equivalence checking and synthesis.

use thiserror::Error;

use crate::lehmer::perm_to_word;
use crate::permutation::Permutation;
use crate::syntax::{Comb, CombPlus, PiType, Prim, TypeError};
use crate::translate::{eval_pi_to_plus, eval_plus_to_hat, hat_denote, quote_hat_to_plus, quote_type, word_to_hat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("programs act on {0} and {1} elements")]
    CardinalityMismatch(usize, usize),
    #[error("permutation on {perm} elements cannot act on type {ty} of size {size}")]
    SizeMismatch { perm: usize, ty: PiType, size: usize },
}

/// Outcome of [`equiv`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// Both programs normalize to `normal_form`.
    Equivalent { normal_form: CombPlus },
    /// The programs send input `witness` to different outputs.
    Inequivalent { witness: usize },
}

impl Equivalence {
    pub fn holds(&self) -> bool {
        matches!(self, Equivalence::Equivalent { .. })
    }
}

/// The permutation computed by `c`, obtained by translating through the
/// additive and skeletal fragments.
pub fn interp(c: &Comb) -> Result<Permutation, PipelineError> {
    Ok(hat_denote(&eval_plus_to_hat(&eval_pi_to_plus(c)?)))
}

/// The canonical additive program with the same denotation as `c`.
pub fn norm1(c: &Comb) -> Result<CombPlus, PipelineError> {
    Ok(synth(&interp(c)?))
}

pub fn equiv(c1: &Comb, c2: &Comb) -> Result<Equivalence, PipelineError> {
    let (p1, p2) = (interp(c1)?, interp(c2)?);
    if p1.len() != p2.len() {
        return Err(PipelineError::CardinalityMismatch(p1.len(), p2.len()));
    }
    Ok(match p1.first_difference(&p2) {
        None => Equivalence::Equivalent { normal_form: synth(&p1) },
        Some(witness) => Equivalence::Inequivalent { witness },
    })
}

/// The normal-form program over `1 + (1 + (... + 0))` denoting `p`.
pub fn synth(p: &Permutation) -> CombPlus {
    if p.is_empty() {
        return CombPlus::id(quote_type(0));
    }
    quote_hat_to_plus(&word_to_hat(&perm_to_word(&p.inverse())))
}

/// [`synth`] reshaped to act on `ty`, whose canonical enumeration gives
/// the indices `p` acts on.
pub fn synth_at(p: &Permutation, ty: &PiType) -> Result<Comb, PipelineError> {
    if ty.size() != p.len() {
        return Err(PipelineError::SizeMismatch { perm: p.len(), ty: ty.clone(), size: ty.size() });
    }
    let f = flatten(ty);
    Ok(Comb::seq(f.clone(), Comb::seq(synth(p).to_comb(), f.invert())))
}

fn at(op: Prim, src: PiType) -> Comb {
    Comb::prim(op, src).expect("primitive applies at this type")
}

/// `ty <-> quote_type(|ty|)`, preserving the canonical enumeration.
pub fn flatten(ty: &PiType) -> Comb {
    let enc = to_encoded(ty);
    let t = enc.target();
    Comb::seq(enc, flatten_sum(&t))
}

/// Removes products, preserving the canonical enumeration.
fn to_encoded(ty: &PiType) -> Comb {
    match ty {
        PiType::Zero | PiType::One => Comb::id(ty.clone()),
        PiType::Sum(a, b) => Comb::plus(to_encoded(a), to_encoded(b)),
        PiType::Prod(a, b) => {
            let (ea, eb) = (to_encoded(a), to_encoded(b));
            let (x, y) = (ea.target(), eb.target());
            Comb::seq(Comb::times(ea, eb), prod_enc(&x, &y))
        }
    }
}

/// `X * Y <-> times_encode(X, Y)` for additive `X`, `Y`.
fn prod_enc(x: &PiType, y: &PiType) -> Comb {
    let here = PiType::prod(x.clone(), y.clone());
    match x {
        PiType::Zero => at(Prim::Absorbr, here),
        PiType::One => at(Prim::UniteStarL, here),
        PiType::Sum(a, b) => Comb::seq(at(Prim::Dist, here), Comb::plus(prod_enc(a, y), prod_enc(b, y))),
        PiType::Prod(..) => unreachable!("additive type expected"),
    }
}

/// Additive `ty <-> quote_type(|ty|)`.
fn flatten_sum(ty: &PiType) -> Comb {
    match ty {
        PiType::Zero => Comb::id(PiType::Zero),
        PiType::One => at(Prim::UnitiPlusR, PiType::One),
        PiType::Sum(a, b) => Comb::seq(Comb::plus(flatten_sum(a), flatten_sum(b)), append(a.size(), b.size())),
        PiType::Prod(..) => unreachable!("additive type expected"),
    }
}

/// `quote_type(n) + quote_type(m) <-> quote_type(n + m)`.
fn append(n: usize, m: usize) -> Comb {
    let src = PiType::sum(quote_type(n), quote_type(m));
    if n == 0 {
        return at(Prim::UnitePlusL, src);
    }
    Comb::seq(at(Prim::AssocrPlus, src), Comb::plus(Comb::id(PiType::One), append(n - 1, m)))
}
