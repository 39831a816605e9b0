use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("algebra is not a Leibniz algebra: {0}")]
    NotLeibniz(String),
    #[error("algebra is not a Lie algebra: {0}")]
    NotLie(String),
    #[error("induced action depends on the chosen representative: {0}")]
    IllDefinedAction(String),
    #[error("invalid Lie algebra in LM: {0}")]
    InvalidLmAlgebra(String),
    #[error("series order {found} is below the requested order {needed}")]
    OrderMismatch { needed: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
