use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid mass matrix: {0}")]
    InvalidMass(String),
    #[error("a characteristic length L_c is required for this conversion")]
    MissingLengthScale,
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("unavailable: {0}")]
    Unavailable(String),
    #[error("unsupported notation: {0}")]
    UnsupportedNotation(String),
    #[error("invalid direction: {0}")]
    InvalidDirection(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("evanescent branch: omega^2 = {0} <= 0")]
    EvanescentBranch(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
