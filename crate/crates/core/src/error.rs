use thiserror::Error;

use crate::group::Model;

/// Errors surfaced by the laboratory. Contract violations indicate a caller
/// bug; the remaining variants are runtime conditions a driver may recover
/// from (refine quadrature, enlarge a group ball, shorten a flow time).
#[derive(Debug, Error)]
pub enum Error {
    #[error("model mismatch: {0:?} vs {1:?}")]
    ModelMismatch(Model, Model),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("precision loss: {0}")]
    PrecisionLoss(String),

    #[error("support overflow: {0}")]
    SupportOverflow(String),

    #[error("numerical instability: {0}")]
    NumericalInstability(String),

    #[error("insufficient data: {admissible} admissible points (need {needed}), noise floor {noise_floor:.3e}")]
    InsufficientData {
        admissible: usize,
        needed: usize,
        noise_floor: f64,
    },

    #[error("eigendata rejected:\n{}", .0.join("\n"))]
    Ingest(Vec<String>),

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
