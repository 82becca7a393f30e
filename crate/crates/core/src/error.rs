use thiserror::Error;

use crate::exactlin::Field;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("unknown field tag `{0}`")]
    UnknownField(String),
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("entry not in field {0}")]
    NotInField(Field),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("algebra is not left Leibniz")]
    NotLeftLeibniz,
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("commutator ideal has dimension {0}, expected 1")]
    GenusNotOne(usize),
    #[error("matrix span is not closed under the commutator")]
    ClosureNotVerified,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
