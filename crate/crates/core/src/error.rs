use thiserror::Error;

/// Errors raised by the lattice-point constructions and verification gates.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Lie type: {0}")]
    InvalidType(String),

    #[error("invalid weight: {0}")]
    InvalidWeight(String),

    #[error("index out of range: {0}")]
    OutOfRange(String),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// A built-in consistency check failed. `gate` names the check.
    #[error("verification gate `{gate}` failed: {detail}")]
    Gate { gate: &'static str, detail: String },
}

impl Error {
    pub(crate) fn gate(gate: &'static str, detail: impl Into<String>) -> Self {
        Error::Gate {
            gate,
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
