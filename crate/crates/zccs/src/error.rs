use thiserror::Error;

/// Errors produced by sequence, construction and verification operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Two sequences or codes that must agree in shape do not.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// An argument is outside the operation's domain (unsupported length,
    /// non-unimodular entry, bad alphabet, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A file or document could not be decoded.
    #[error("parse error: {0}")]
    Parse(String),

    /// An input failed a verification that the operation requires.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
