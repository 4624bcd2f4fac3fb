use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// The request exceeds a hard size limit of an exact algorithm.
    #[error("{what} supports n <= {limit}, got n = {n}")]
    Capability { what: &'static str, limit: usize, n: usize },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A computed result contradicts a proven identity. Seeing this means a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
