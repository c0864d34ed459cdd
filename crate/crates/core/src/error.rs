use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, GreyError>;

#[derive(Debug, Error)]
pub enum GreyError {
    #[error("invalid order {value}: {reason}")]
    InvalidOrder { value: f64, reason: &'static str },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("series too short: need at least {needed} points, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("singular normal matrix (condition number {condition:.3e})")]
    Singular { condition: f64 },

    #[error("degenerate development coefficient a = {a:e}")]
    Degenerate { a: f64 },

    #[error("Mittag-Leffler series for p = {p}, z = {z} did not converge: {reason}")]
    NoConvergence {
        p: f64,
        z: f64,
        reason: &'static str,
    },

    #[error("objective returned non-finite values for every probe")]
    UnusableObjective,

    #[error("unknown dataset `{0}`")]
    UnknownDataset(String),

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("label continuity violated: {0}")]
    LabelContinuity(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl GreyError {
    /// True for failures caused by the numbers themselves (degenerate or
    /// singular fits, series that do not converge, searches that
    /// never found a usable point) rather than by bad input.
    pub fn is_numeric(&self) -> bool {
        matches!(
            self,
            GreyError::Singular { .. }
                | GreyError::Degenerate { .. }
                | GreyError::NoConvergence { .. }
                | GreyError::UnusableObjective
        )
    }
}
