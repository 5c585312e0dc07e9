//! The reference interpreter: values flow through combinators clause by
//! clause, and a program's meaning is the permutation it induces on the
//! canonical enumeration of its types.

use thiserror::Error;

use crate::permutation::{PermError, Permutation};
use crate::syntax::{Axiom2, AxiomError, Comb, PiType, Prim, TypeError, Value};

/// The inhabitants of a type in canonical order: left summands before
/// right ones, pairs ordered with the left component major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    ty: PiType,
    elements: Vec<Value>,
}

impl Enumeration {
    pub fn ty(&self) -> &PiType {
        &self.ty
    }

    pub fn elements(&self) -> &[Value] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index(&self, v: &Value) -> Option<usize> {
        index_of(&self.ty, v)
    }
}

pub fn enumerate(ty: &PiType) -> Enumeration {
    Enumeration { ty: ty.clone(), elements: (0..ty.size()).map(|i| value_at(ty, i).expect("in range")).collect() }
}

/// Position of `v` in the canonical enumeration of `ty`.
pub fn index_of(ty: &PiType, v: &Value) -> Option<usize> {
    match (ty, v) {
        (PiType::One, Value::Tt) => Some(0),
        (PiType::Sum(a, _), Value::Inl(v)) => index_of(a, v),
        (PiType::Sum(a, b), Value::Inr(v)) => Some(a.size() + index_of(b, v)?),
        (PiType::Prod(a, b), Value::Pair(x, y)) => Some(index_of(a, x)? * b.size() + index_of(b, y)?),
        _ => None,
    }
}

/// The `i`-th element of the canonical enumeration of `ty`.
pub fn value_at(ty: &PiType, i: usize) -> Option<Value> {
    if i >= ty.size() {
        return None;
    }
    Some(match ty {
        PiType::Zero => unreachable!("empty type"),
        PiType::One => Value::Tt,
        PiType::Sum(a, b) => {
            let n = a.size();
            if i < n {
                Value::inl(value_at(a, i)?)
            } else {
                Value::inr(value_at(b, i - n)?)
            }
        }
        PiType::Prod(a, b) => {
            let m = b.size();
            Value::pair(value_at(a, i / m)?, value_at(b, i % m)?)
        }
    })
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("value {value} does not have type {ty}")]
    IllTyped { value: Value, ty: PiType },
    #[error("`{op}` cannot consume {value}")]
    Stuck { op: &'static str, value: Value },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DenoteError {
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("interpreter produced a non-bijective table: {0}")]
    NotBijective(#[from] PermError),
}

/// Runs `c` on `v`, checking that `v` inhabits the source type.
pub fn eval_value(c: &Comb, v: &Value) -> Result<Value, EvalError> {
    let ty = c.source();
    if !v.has_type(&ty) {
        return Err(EvalError::IllTyped { value: v.clone(), ty });
    }
    eval(c, v.clone())
}

fn stuck(op: Prim, v: Value) -> EvalError {
    EvalError::Stuck { op: op.name(), value: v }
}

fn eval(c: &Comb, v: Value) -> Result<Value, EvalError> {
    use Value::*;
    match c {
        Comb::Seq(a, b) => eval(b, eval(a, v)?),
        Comb::Plus(a, b) => match v {
            Inl(x) => Ok(Value::inl(eval(a, *x)?)),
            Inr(y) => Ok(Value::inr(eval(b, *y)?)),
            v => Err(EvalError::IllTyped { value: v, ty: c.source() }),
        },
        Comb::Times(a, b) => match v {
            Pair(x, y) => Ok(Value::pair(eval(a, *x)?, eval(b, *y)?)),
            v => Err(EvalError::IllTyped { value: v, ty: c.source() }),
        },
        Comb::Prim { op, .. } => {
            let op = *op;
            match (op, v) {
                (Prim::Id, v) => Ok(v),
                (Prim::UnitePlusL, Inr(v)) => Ok(*v),
                (Prim::UnitiPlusL, v) => Ok(Value::inr(v)),
                (Prim::UnitePlusR, Inl(v)) => Ok(*v),
                (Prim::UnitiPlusR, v) => Ok(Value::inl(v)),
                (Prim::SwapPlus, Inl(v)) => Ok(Value::inr(*v)),
                (Prim::SwapPlus, Inr(v)) => Ok(Value::inl(*v)),
                (Prim::AssoclPlus, Inl(a)) => Ok(Value::inl(Value::inl(*a))),
                (Prim::AssoclPlus, Inr(bc)) => Ok(match *bc {
                    Inl(b) => Value::inl(Value::inr(*b)),
                    Inr(c) => Value::inr(*c),
                    other => return Err(stuck(op, Value::inr(other))),
                }),
                (Prim::AssocrPlus, Inl(ab)) => Ok(match *ab {
                    Inl(a) => Value::inl(*a),
                    Inr(b) => Value::inr(Value::inl(*b)),
                    other => return Err(stuck(op, Value::inl(other))),
                }),
                (Prim::AssocrPlus, Inr(c)) => Ok(Value::inr(Value::inr(*c))),
                (Prim::UniteStarL, Pair(_, v)) => Ok(*v),
                (Prim::UnitiStarL, v) => Ok(Value::pair(Tt, v)),
                (Prim::UniteStarR, Pair(v, _)) => Ok(*v),
                (Prim::UnitiStarR, v) => Ok(Value::pair(v, Tt)),
                (Prim::SwapStar, Pair(a, b)) => Ok(Pair(b, a)),
                (Prim::AssoclStar, Pair(a, bc)) => match *bc {
                    Pair(b, c) => Ok(Pair(Box::new(Pair(a, b)), c)),
                    other => Err(stuck(op, Pair(a, Box::new(other)))),
                },
                (Prim::AssocrStar, Pair(ab, c)) => match *ab {
                    Pair(a, b) => Ok(Pair(a, Box::new(Pair(b, c)))),
                    other => Err(stuck(op, Pair(Box::new(other), c))),
                },
                (Prim::Dist, Pair(ab, c)) => match *ab {
                    Inl(a) => Ok(Value::inl(Pair(a, c))),
                    Inr(b) => Ok(Value::inr(Pair(b, c))),
                    other => Err(stuck(op, Pair(Box::new(other), c))),
                },
                (Prim::Factor, Inl(ac)) => match *ac {
                    Pair(a, c) => Ok(Pair(Box::new(Inl(a)), c)),
                    other => Err(stuck(op, Value::inl(other))),
                },
                (Prim::Factor, Inr(bc)) => match *bc {
                    Pair(b, c) => Ok(Pair(Box::new(Inr(b)), c)),
                    other => Err(stuck(op, Value::inr(other))),
                },
                // The absorbing combinators have empty domains.
                (op, v) => Err(stuck(op, v)),
            }
        }
    }
}

/// The permutation `c` induces on canonical indices.
pub fn denote_comb(c: &Comb) -> Result<Permutation, DenoteError> {
    let (src, tgt) = c.typecheck()?;
    let table = (0..src.size())
        .map(|i| {
            let v = value_at(&src, i).expect("in range");
            let w = eval(c, v)?;
            Ok(index_of(&tgt, &w).expect("evaluation preserves typing"))
        })
        .collect::<Result<Vec<_>, EvalError>>()?;
    Ok(Permutation::from_table(table)?)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AxiomCheckError {
    #[error(transparent)]
    Axiom(#[from] AxiomError),
    #[error(transparent)]
    Denote(#[from] DenoteError),
}

/// Whether both sides of the derivation, and of every premise, denote the
/// same permutation.
pub fn check_axiom2(a: &Axiom2) -> Result<bool, AxiomCheckError> {
    for premise in a.premises() {
        if !check_axiom2(premise)? {
            return Ok(false);
        }
    }
    let (lhs, rhs) = a.sides()?;
    Ok(denote_comb(&lhs)? == denote_comb(&rhs)?)
}

/// Reading of `B n` values as `n`-bit numbers: the leftmost component is the
/// most significant bit, and `inl tt` (true) is 1.
pub mod bits {
    use crate::permutation::{PermError, Permutation};
    use crate::syntax::{PiType, Value};

    pub fn to_value(n: usize, bits: usize) -> Value {
        assert!(n >= 1 && bits < 1 << n, "{bits} does not fit in {n} bits");
        let bit = |k: usize| Value::bool(bits >> (n - 1 - k) & 1 == 1);
        (0..n - 1).rev().fold(bit(n - 1), |acc, k| Value::pair(bit(k), acc))
    }

    pub fn from_value(n: usize, v: &Value) -> Option<usize> {
        if n == 0 || !v.has_type(&PiType::bits(n)) {
            return None;
        }
        let bit = |b: &Value| usize::from(matches!(b, Value::Inl(_)));
        let mut acc = 0;
        let mut cur = v;
        for _ in 1..n {
            let Value::Pair(b, rest) = cur else { return None };
            acc = acc << 1 | bit(b);
            cur = rest;
        }
        Some(acc << 1 | bit(cur))
    }

    /// Canonical index of the value whose bit reading is `bits`.
    pub fn to_index(n: usize, bits: usize) -> usize {
        (1 << n) - 1 - bits
    }

    pub fn from_index(n: usize, index: usize) -> usize {
        (1 << n) - 1 - index
    }

    /// Converts a truth table over bit readings into a permutation of
    /// canonical indices.
    pub fn perm_from_table(table: Vec<usize>) -> Result<Permutation, PermError> {
        Ok(Permutation::from_table(table)?.reflect())
    }

    /// The truth table, over bit readings, of a permutation of canonical
    /// indices.
    pub fn table_of_perm(p: &Permutation) -> Vec<usize> {
        p.reflect().table().to_vec()
    }

    /// `"011"` to a value of `B 3`.
    pub fn parse(s: &str) -> Option<Value> {
        if s.is_empty() || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return None;
        }
        Some(to_value(s.len(), usize::from_str_radix(s, 2).ok()?))
    }

    pub fn render(n: usize, bits: usize) -> String {
        format!("{bits:0n$b}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::gates;

    fn prim(op: Prim, src: PiType) -> Comb {
        Comb::prim(op, src).unwrap()
    }

    #[test]
    fn enumeration_order() {
        let e = enumerate(&PiType::prod(PiType::two(), PiType::two()));
        let (t, f) = (Value::bool(true), Value::bool(false));
        let expected = vec![
            Value::pair(t.clone(), t.clone()),
            Value::pair(t.clone(), f.clone()),
            Value::pair(f.clone(), t.clone()),
            Value::pair(f.clone(), f.clone()),
        ];
        assert_eq!(e.elements(), expected.as_slice());
        assert_eq!(enumerate(&PiType::bits(3)).len(), 8);
        assert!(enumerate(&PiType::prod(PiType::Zero, PiType::two())).is_empty());
        for (i, v) in e.elements().iter().enumerate() {
            assert_eq!(e.index(v), Some(i));
        }
    }

    #[test]
    fn primitive_clauses() {
        let s = prim(Prim::SwapPlus, PiType::two());
        assert_eq!(eval_value(&s, &Value::bool(true)), Ok(Value::bool(false)));
        assert!(eval_value(&s, &Value::Tt).is_err());
        let t = Value::bool(true);
        let cx = gates::cx();
        assert_eq!(eval_value(&cx, &Value::pair(t.clone(), t.clone())), Ok(Value::pair(t.clone(), Value::bool(false))));
    }

    #[test]
    fn toffoli_flips_when_both_controls_set() {
        let (t, f) = (Value::bool(true), Value::bool(false));
        let input = Value::pair(t.clone(), Value::pair(t.clone(), f));
        let out = eval_value(&gates::ccx(), &input).unwrap();
        assert_eq!(out, Value::pair(t.clone(), Value::pair(t.clone(), t)));
    }

    #[test]
    fn swap_star_transposes_indices() {
        let c = prim(Prim::SwapStar, PiType::prod(PiType::two(), PiType::numeral(3)));
        let p = denote_comb(&c).unwrap();
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(p.apply(i * 3 + j), j * 2 + i);
            }
        }
    }

    #[test]
    fn inverse_undoes_every_primitive() {
        let ty = PiType::sum(PiType::two(), PiType::One);
        let samples = [
            prim(Prim::AssoclPlus, PiType::sum(PiType::One, PiType::two())),
            prim(Prim::Dist, PiType::prod(PiType::two(), ty.clone())),
            prim(Prim::UnitiStarR, ty.clone()),
            prim(Prim::UnitePlusL, PiType::sum(PiType::Zero, ty)),
        ];
        for c in samples {
            let round = Comb::seq(c.clone(), c.invert());
            assert!(denote_comb(&round).unwrap().is_identity(), "{c}");
        }
    }

    #[test]
    fn bit_codec() {
        let v = bits::to_value(3, 0b011);
        let (t, f) = (Value::bool(true), Value::bool(false));
        assert_eq!(v, Value::pair(f, Value::pair(t.clone(), t)));
        assert_eq!(bits::from_value(3, &v), Some(3));
        assert_eq!(index_of(&PiType::bits(3), &v), Some(bits::to_index(3, 3)));
        assert_eq!(bits::parse("011"), Some(v));
        assert_eq!(bits::render(3, 3), "011");
        assert_eq!(bits::to_value(1, 1), Value::bool(true));
        for b in 0..16 {
            assert_eq!(bits::from_value(4, &bits::to_value(4, b)), Some(b));
        }
    }
}
