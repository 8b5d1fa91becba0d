use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("matrix is not a symplectic similitude")]
    NotSimilitude,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("singular matrix")]
    Singular,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("inconsistent parameters: {0}")]
    ParameterInconsistency(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("value not in the fraction field of {0}")]
    NotInFractionField(String),
    #[error("closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
