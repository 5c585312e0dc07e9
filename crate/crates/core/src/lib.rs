//! Evaluation, normalization, equivalence checking and synthesis for Π, a
//! language of reversible programs over finite types.

pub mod coxeter;
pub mod frontend;
pub mod lehmer;
pub mod permutation;
pub mod pipeline;
pub mod semantics;
pub mod syntax;
pub mod translate;

pub use permutation::Permutation;
pub use syntax::{Comb, CombHat, CombPlus, PiType, Prim, Value};
