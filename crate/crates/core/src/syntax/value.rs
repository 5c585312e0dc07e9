use std::fmt;

use super::PiType;

/// An inhabitant of a [`PiType`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Tt,
    Inl(Box<Value>),
    Inr(Box<Value>),
    Pair(Box<Value>, Box<Value>),
}

impl Value {
    pub fn inl(v: Value) -> Value {
        Value::Inl(Box::new(v))
    }

    pub fn inr(v: Value) -> Value {
        Value::Inr(Box::new(v))
    }

    pub fn pair(a: Value, b: Value) -> Value {
        Value::Pair(Box::new(a), Box::new(b))
    }

    pub fn bool(b: bool) -> Value {
        if b {
            Value::inl(Value::Tt)
        } else {
            Value::inr(Value::Tt)
        }
    }

    pub fn has_type(&self, ty: &PiType) -> bool {
        match (self, ty) {
            (Value::Tt, PiType::One) => true,
            (Value::Inl(v), PiType::Sum(a, _)) => v.has_type(a),
            (Value::Inr(v), PiType::Sum(_, b)) => v.has_type(b),
            (Value::Pair(v, w), PiType::Prod(a, b)) => v.has_type(a) && w.has_type(b),
            _ => false,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Tt => f.write_str("tt"),
            Value::Inl(v) => write!(f, "inl {v}"),
            Value::Inr(v) => write!(f, "inr {v}"),
            Value::Pair(a, b) => write!(f, "({a}, {b})"),
        }
    }
}
