use std::fmt;

use thiserror::Error;

/// A bijection on `0..n`, stored as `table[i] = image of i` together with
/// its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    table: Vec<usize>,
    inv: Vec<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PermError {
    #[error("entry {value} at position {index} is out of range for {n} elements")]
    OutOfRange { index: usize, value: usize, n: usize },
    #[error("value {value} appears twice (positions {first} and {second})")]
    Repeated { value: usize, first: usize, second: usize },
    #[error("sizes differ: {0} and {1}")]
    SizeMismatch(usize, usize),
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { table: (0..n).collect(), inv: (0..n).collect() }
    }

    /// Validates that `table` is a bijection on `0..table.len()`.
    pub fn from_table(table: Vec<usize>) -> Result<Permutation, PermError> {
        let n = table.len();
        let mut inv = vec![usize::MAX; n];
        for (index, &value) in table.iter().enumerate() {
            if value >= n {
                return Err(PermError::OutOfRange { index, value, n });
            }
            if inv[value] != usize::MAX {
                return Err(PermError::Repeated { value, first: inv[value], second: index });
            }
            inv[value] = index;
        }
        Ok(Permutation { table, inv })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverse(&self) -> Permutation {
        Permutation { table: self.inv.clone(), inv: self.table.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` first, then `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch(self.len(), other.len()));
        }
        let table = self.table.iter().map(|&i| other.table[i]).collect();
        Ok(Permutation::from_table(table).expect("composite of bijections"))
    }

    /// Block-diagonal sum: `self` on the first block, `other` shifted after it.
    pub fn sum(&self, other: &Permutation) -> Permutation {
        let n = self.len();
        let table = self.table.iter().copied().chain(other.table.iter().map(|&j| n + j)).collect();
        Permutation::from_table(table).expect("sum of bijections")
    }

    /// Product under left-major order: `(i, j) ↦ (self(i), other(j))`.
    pub fn tensor(&self, other: &Permutation) -> Permutation {
        let m = other.len();
        let table = self
            .table
            .iter()
            .flat_map(|&a| other.table.iter().map(move |&b| a * m + b))
            .collect();
        Permutation::from_table(table).expect("product of bijections")
    }

    /// Conjugates by `i ↦ n - 1 - i`.
    pub fn reflect(&self) -> Permutation {
        let n = self.len();
        let table = (0..n).map(|i| n - 1 - self.table[n - 1 - i]).collect();
        Permutation::from_table(table).expect("conjugate of a bijection")
    }

    /// Least index where the two permutations disagree.
    pub fn first_difference(&self, other: &Permutation) -> Option<usize> {
        self.table.iter().zip(&other.table).position(|(a, b)| a != b)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.table.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}
