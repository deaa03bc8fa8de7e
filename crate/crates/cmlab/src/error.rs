use thiserror::Error;

/// Errors raised by the numerical kernels and the experiment drivers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("outside supported envelope: {0}")]
    Envelope(String),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },

    #[error("non-finite state component {index} at t = {t}")]
    NonFinite { t: f64, index: usize },

    #[error("spectrum gap {gap:e} is below the threshold {threshold:e}")]
    Degenerate { gap: f64, threshold: f64 },

    #[error("collision at t = {t}: minimum gap {gap:e}")]
    Collision { t: f64, gap: f64 },

    #[error("resampling cap of {0} draws exceeded")]
    ResampleCap(usize),

    #[error("singular matrix")]
    Singular,

    #[error("negative eigenvalue {value} in the {sector} sector")]
    NegativeEigenvalue { value: f64, sector: &'static str },

    #[error("configuration too close to a collision: {0}")]
    CollisionMargin(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
