use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("invalid poset: {0}")]
    InvalidPoset(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid representatives: {0}")]
    InvalidRepresentatives(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("invalid chain complex: {0}")]
    InvalidComplex(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid_arg(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
