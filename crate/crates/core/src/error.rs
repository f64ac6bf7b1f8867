use thiserror::Error;

/// Errors raised by the library. Mathematical check failures are not errors;
/// they are reported through [`crate::algebras::CheckReport`].
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed call: dimension or arity mismatch, wrong algebra kind, bad flag.
    #[error("usage error: {0}")]
    Usage(String),

    /// An input does not satisfy the structure an operation requires.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An internal cross-check failed; indicates a bug or inconsistent data.
    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },

    #[error("invalid document at {path}: {message}")]
    Validation { path: String, message: String },

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn validation(path: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Validation { path: path.into(), message: msg.into() }
    }
}
