use thiserror::Error;

/// Errors raised by the algebra routines.
///
/// `Argument` covers violated preconditions supplied by the caller.
/// `Internal` marks a failed correctness certificate (a descent or
/// consistency check that can only fail if the representation catalog
/// or an algorithm is wrong).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn arg<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Argument(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}
