use thiserror::Error;

/// Errors produced by weight validation, dimension checks and the
/// self-diagnosing structural assertions of the term generators.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("weight entries are not non-increasing: {0:?}")]
    NotDominant(Vec<i64>),

    #[error("partition entries must be non-negative: {0:?}")]
    NegativePart(Vec<i64>),

    #[error("expected a sequence of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("structural violation: {0}")]
    StructuralViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
