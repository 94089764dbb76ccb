use thiserror::Error;

/// Errors raised by the combinatorial engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Unsupported or inconsistent type configuration.
    #[error("configuration error: {0}")]
    Config(String),
    /// An argument lies outside the domain of the operation (e.g. not a root).
    #[error("domain error: {0}")]
    Domain(String),
    /// Malformed input: wrong dimension, index out of range, bad syntax.
    #[error("usage error: {0}")]
    Usage(String),
    /// An internal invariant was violated.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
