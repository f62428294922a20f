//! Error types shared by the whole crate.
//!
//! Errors fall into four families, mirrored by the CLI exit codes:
//! parse errors (2), precondition violations (3), theorem/internal
//! consistency failures (4) and specialization failures (5).

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("zero polynomial not allowed: {0}")]
    ZeroPolynomial(String),

    #[error("divisor is not monic: {0}")]
    NonMonic(String),

    #[error("input is not homogeneous: {0}")]
    NotHomogeneous(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("generator set is not minimal: {0}")]
    NotMinimal(String),

    #[error("not a Groebner basis: {0}")]
    NotGroebnerBasis(String),

    #[error("polynomial is not a member of the ideal: {0}")]
    NotMember(String),

    #[error("field too small: need {needed} distinct scalars, field has {available}")]
    FieldSize { needed: usize, available: usize },

    #[error("generic coordinates not reached: {0}")]
    Genericity(String),

    #[error("no valid deformation weight found: {0}")]
    WeightSearch(String),

    #[error("input is not homogeneous for the given grading: {0}")]
    Grading(String),

    #[error("theorem violation (implementation bug): {0}")]
    TheoremViolation(String),

    #[error("internal consistency error: {0}")]
    InternalConsistency(String),

    #[error("specialization failure: {0}")]
    SpecializationFailure(String),
}

impl Error {
    /// CLI exit code family for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::TheoremViolation(_) | Error::InternalConsistency(_) => 4,
            Error::SpecializationFailure(_) => 5,
            _ => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
