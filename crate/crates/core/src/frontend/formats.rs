//! On-disk formats.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::permutation::{PermError, Permutation};

/// A permutation table, stored as `{"n": 3, "table": [2, 0, 1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermFile {
    pub n: usize,
    pub table: Vec<usize>,
}

#[derive(Debug, Error)]
pub enum PermFileError {
    #[error("malformed permutation file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("declared n = {declared} but the table has {actual} entries")]
    Length { declared: usize, actual: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl PermFile {
    pub fn from_json(text: &str) -> Result<PermFile, PermFileError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn to_permutation(&self) -> Result<Permutation, PermFileError> {
        if self.n != self.table.len() {
            return Err(PermFileError::Length { declared: self.n, actual: self.table.len() });
        }
        Ok(Permutation::from_table(self.table.clone())?)
    }
}

impl From<&Permutation> for PermFile {
    fn from(p: &Permutation) -> PermFile {
        PermFile { n: p.len(), table: p.table().to_vec() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let f = PermFile::from_json(r#"{"n": 8, "table": [0,5,6,7,4,1,2,3]}"#).unwrap();
        assert_eq!(f.to_json(), r#"{"n":8,"table":[0,5,6,7,4,1,2,3]}"#);
        assert_eq!(f.to_permutation().unwrap().table(), &[0, 5, 6, 7, 4, 1, 2, 3]);
        assert_eq!(PermFile::from(&f.to_permutation().unwrap()), f);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(PermFile::from_json("[1,0]"), Err(PermFileError::Json(_))));
        let short = PermFile { n: 3, table: vec![1, 0] };
        assert!(matches!(short.to_permutation(), Err(PermFileError::Length { .. })));
        let dup = PermFile { n: 2, table: vec![1, 1] };
        assert!(matches!(dup.to_permutation(), Err(PermFileError::Perm(_))));
    }
}
