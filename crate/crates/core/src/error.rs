use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An input outside an operation's domain (zero polynomial, n = 0, non-free curve, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An enumeration would exceed the configured cap.
    #[error("resource error: {what} needs {needed} items, cap is {cap}")]
    Resource { what: String, needed: String, cap: u64 },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
