//! Crate-wide error type.
//!
//! Variants are grouped so the CLI can map them onto its exit codes:
//! configuration/parameter problems (2), numerical failures (3) and geometric
//! hypothesis violations (4).

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("config: {0}")]
    Config(String),

    #[error("parameter: {0}")]
    Parameter(String),

    #[error("{what} of size {requested} exceeds the supported limit {max}")]
    SizeLimit {
        what: &'static str,
        requested: usize,
        max: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("hypothesis ({condition}) violated: {detail}")]
    Hypothesis {
        condition: &'static str,
        detail: String,
    },

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    #[error("prevertex crowding: minimum gap {min_gap:.3e} below 1e-13")]
    Crowding { min_gap: f64 },

    #[error("{what} did not converge (best residual {residual:.3e})")]
    NonConvergence {
        what: String,
        residual: f64,
        history: Vec<f64>,
    },

    #[error("numerical: {0}")]
    Numerical(String),

    #[error("resolution too coarse: {0}")]
    Resolution(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("serialization: {0}")]
    Serde(String),
}

impl Error {
    /// Process exit code the CLI reports for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Parameter(_) | Error::SizeLimit { .. } | Error::Unsupported(_) => 2,
            Error::Hypothesis { .. } | Error::Degenerate(_) => 4,
            _ => 3,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}
