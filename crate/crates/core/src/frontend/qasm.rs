//! Import of a small classical subset of OpenQASM: one `qreg` and the
//! gates `x`, `cx` and `ccx`.

use std::fmt;

use thiserror::Error;

use crate::semantics::{bits, eval_value};
use crate::syntax::gates::{self, cif, wire_router};
use crate::syntax::{Comb, PiType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    X(usize),
    CX(usize, usize),
    CCX(usize, usize, usize),
}

impl Gate {
    /// Controls first, target last.
    pub fn operands(&self) -> Vec<usize> {
        match *self {
            Gate::X(t) => vec![t],
            Gate::CX(c, t) => vec![c, t],
            Gate::CCX(c1, c2, t) => vec![c1, c2, t],
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Gate::X(_) => "x",
            Gate::CX(..) => "cx",
            Gate::CCX(..) => "ccx",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QasmCircuit {
    pub nqubits: usize,
    pub gates: Vec<Gate>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QasmError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unsupported gate `{name}`")]
    UnknownGate { line: usize, name: String },
    #[error("line {line}: qubit {index} is out of range for a register of {size}")]
    IndexOutOfRange { line: usize, index: usize, size: usize },
    #[error("line {line}: qubit {index} is used twice in one gate")]
    RepeatedOperand { line: usize, index: usize },
    #[error("no `qreg` declaration")]
    MissingRegister,
}

/// Splits the text into `;`-terminated statements tagged with the line on
/// which each starts.
fn statements(text: &str) -> Result<Vec<(usize, String)>, QasmError> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut start = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split("//").next().unwrap_or("");
        for ch in line.chars() {
            if current.trim().is_empty() && !ch.is_whitespace() {
                start = i + 1;
            }
            if ch == ';' {
                out.push((start, current.trim().to_string()));
                current.clear();
            } else {
                current.push(ch);
            }
        }
        current.push(' ');
    }
    if !current.trim().is_empty() {
        return Err(QasmError::Syntax { line: start, msg: "missing `;`".into() });
    }
    Ok(out)
}

/// Parses `name[index]`.
fn operand(s: &str, line: usize) -> Result<(String, usize), QasmError> {
    let bad = || QasmError::Syntax { line, msg: format!("expected `reg[index]`, found `{s}`") };
    let (name, rest) = s.trim().split_once('[').ok_or_else(bad)?;
    let index = rest.strip_suffix(']').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
        return Err(bad());
    }
    Ok((name.to_string(), index))
}

pub fn parse_qasm(text: &str) -> Result<QasmCircuit, QasmError> {
    let mut register: Option<(String, usize)> = None;
    let mut gates = Vec::new();
    for (line, stmt) in statements(text)? {
        if stmt.is_empty() {
            continue;
        }
        let (head, args) = stmt.split_once(char::is_whitespace).unwrap_or((&stmt, ""));
        match head {
            "OPENQASM" | "include" => continue,
            "qreg" => {
                if register.is_some() {
                    return Err(QasmError::Syntax { line, msg: "only one register is supported".into() });
                }
                let (name, size) = operand(args, line)?;
                if size == 0 {
                    return Err(QasmError::Syntax { line, msg: "register must have at least one qubit".into() });
                }
                register = Some((name, size));
            }
            "x" | "cx" | "ccx" => {
                let (reg, size) = register.as_ref().ok_or(QasmError::MissingRegister)?;
                let mut ops = Vec::new();
                for arg in args.split(',') {
                    let (name, index) = operand(arg, line)?;
                    if &name != reg {
                        return Err(QasmError::Syntax { line, msg: format!("unknown register `{name}`") });
                    }
                    if index >= *size {
                        return Err(QasmError::IndexOutOfRange { line, index, size: *size });
                    }
                    if ops.contains(&index) {
                        return Err(QasmError::RepeatedOperand { line, index });
                    }
                    ops.push(index);
                }
                let gate = match (head, ops.as_slice()) {
                    ("x", &[t]) => Gate::X(t),
                    ("cx", &[c, t]) => Gate::CX(c, t),
                    ("ccx", &[c1, c2, t]) => Gate::CCX(c1, c2, t),
                    _ => {
                        return Err(QasmError::Syntax { line, msg: format!("wrong number of operands for `{head}`") })
                    }
                };
                gates.push(gate);
            }
            other => return Err(QasmError::UnknownGate { line, name: other.to_string() }),
        }
    }
    let (_, nqubits) = register.ok_or(QasmError::MissingRegister)?;
    Ok(QasmCircuit { nqubits, gates })
}

impl fmt::Display for QasmCircuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "OPENQASM 2.0;")?;
        writeln!(f, "qreg q[{}];", self.nqubits)?;
        for g in &self.gates {
            let ops: Vec<String> = g.operands().iter().map(|i| format!("q[{i}]")).collect();
            writeln!(f, "{} {};", g.name(), ops.join(", "))?;
        }
        Ok(())
    }
}

/// Negates wire 0 of `B n`.
fn x_front(n: usize) -> Comb {
    if n == 1 {
        gates::x()
    } else {
        Comb::times(gates::x(), Comb::id(PiType::bits(n - 1)))
    }
}

fn controlled(n: usize, inner: Comb) -> Comb {
    cif(inner, Comb::id(PiType::bits(n - 1))).expect("branches share a type")
}

/// The program on `B n` for one gate.
pub fn gate_to_pi(n: usize, gate: &Gate) -> Comb {
    let front = match gate {
        Gate::X(_) => x_front(n),
        Gate::CX(..) => controlled(n, x_front(n - 1)),
        Gate::CCX(..) => controlled(n, controlled(n - 1, x_front(n - 2))),
    };
    let operands = gate.operands();
    let rest = (0..n).filter(|w| !operands.contains(w));
    let order: Vec<usize> = operands.iter().copied().chain(rest).collect();
    let route = wire_router(&order).expect("operands are distinct and in range");
    if route == Comb::id(PiType::bits(n)) {
        return front;
    }
    let back = route.invert();
    Comb::seq(route, Comb::seq(front, back))
}

/// The whole circuit as a program on `B nqubits`, gates in source order.
pub fn qasm_to_pi(circ: &QasmCircuit) -> Comb {
    let steps = circ.gates.iter().map(|g| gate_to_pi(circ.nqubits, g));
    Comb::seq_all(steps).unwrap_or_else(|| Comb::id(PiType::bits(circ.nqubits)))
}

/// The register contents after each gate, as bit patterns with qubit 0
/// most significant.
pub fn trace(circ: &QasmCircuit, input: usize) -> Vec<usize> {
    let n = circ.nqubits;
    let mut v = bits::to_value(n, input);
    circ.gates
        .iter()
        .map(|g| {
            v = eval_value(&gate_to_pi(n, g), &v).expect("gate programs are well-typed");
            bits::from_value(n, &v).expect("result lives in B n")
        })
        .collect()
}
