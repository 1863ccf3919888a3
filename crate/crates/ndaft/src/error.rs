use thiserror::Error;

/// Errors surfaced by parsing, loading and the enumeration-bounded engine
/// operations.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed program, lattice or table text.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Input is well-formed but outside the domain of the requested
    /// operation (wrong rule class, inconsistent interpretation, unknown
    /// atom, invalid mode combination, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration guard was exceeded.
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Invariant violation inside the engine (e.g. a state iteration that
    /// does not converge, which signals a broken operator).
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(line: usize, col: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, col, msg: msg.into() }
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
