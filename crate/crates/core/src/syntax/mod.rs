//! Program representations for the full language, its additive fragment and
//! the skeletal fragment over natural-number sizes.

mod axiom;
mod comb;
pub mod gates;
mod hat;
mod parse;
mod plus;
mod print;
mod ty;
mod unify;
mod value;

pub use axiom::{Axiom2, AxiomError, AxiomFamily};
pub use comb::{Comb, Prim, TypeError};
pub use gates::GateError;
pub use hat::{CombHat, HatError};
pub use parse::{parse_comb, parse_comb_in, parse_program, parse_type, parse_value, Definition, ParseError};
pub use plus::{CombPlus, PlusPrim, PlusTypeError};
pub use print::{print_comb, print_definition};
pub use ty::PiType;
pub use value::Value;
