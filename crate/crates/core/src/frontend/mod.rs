//! File formats and circuit import.

pub mod formats;
pub mod qasm;

pub use formats::{PermFile, PermFileError};
pub use qasm::{gate_to_pi, parse_qasm, qasm_to_pi, trace, Gate, QasmCircuit, QasmError};
