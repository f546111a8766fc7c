use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("unknown variant {variant:?} for {family}")]
    UnknownVariant { family: String, variant: String },

    #[error("assignment for {found} used with variant {expected}")]
    WrongVariant { expected: String, found: String },

    #[error("missing parameter {0}")]
    MissingParameter(String),

    #[error("domain constraint {0}≠0 violated")]
    DomainConstraint(String),

    #[error("division by zero while evaluating {0}")]
    DivisionByZero(String),

    #[error("could not satisfy domain constraints of {variant} within {attempts} attempts")]
    SamplingExhausted { variant: String, attempts: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
