use std::fmt;

/// Errors produced by algebra construction, counting, and the spectral checks.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A Kupisch series failed validation; `index` is 1-based.
    InvalidKupisch { index: usize, message: String },
    /// A parameter was outside the supported domain.
    InvalidInput(String),
    /// Two independent evaluation routes disagreed. This signals an
    /// implementation bug, never bad input.
    Inconsistent(String),
    /// The root finder could not meet the residual bound.
    NoConvergence { residual: f64 },
    /// A numeric closed-form check exceeded its tolerance.
    CheckFailed(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidKupisch { index, message } => {
                write!(f, "invalid Kupisch series at index {index}: {message}")
            }
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Inconsistent(msg) => write!(f, "internal inconsistency: {msg}"),
            Error::NoConvergence { residual } => {
                write!(f, "root finder did not converge (best residual {residual:e})")
            }
            Error::CheckFailed(msg) => write!(f, "check failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
