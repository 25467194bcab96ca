use thiserror::Error;

/// Errors raised by the kernel. Axiom violations are never errors; they are
/// reported as [`crate::report::Violation`] lists.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("unsupported characteristic: p = {p}, dim = {dim} (trace form needs p > dim, exhaustive search needs p^dim <= 4096)")]
    UnsupportedCharacteristic { p: u64, dim: usize },

    #[error("bialgebra has no antipode")]
    NoAntipode,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("no integral with non-zero counit value")]
    NoSeparabilityWitness,

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
