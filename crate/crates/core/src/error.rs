use thiserror::Error;

/// Errors raised by the geometry, causal-structure and figure layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("spatial dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("invalid spatial axes ({0}, {1}) for n = {2}: indices must be distinct and in 1..=n")]
    InvalidAxes(usize, usize, usize),

    #[error("radius must be positive and finite, got {0}")]
    InvalidRadius(f64),

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("point is not on the hyperboloid S(R): form residual {residual:e}")]
    OffHyperboloid { residual: f64 },

    #[error("matrix is not a Lorentz isometry: residual {0:e}")]
    NotAnIsometry(f64),

    #[error("degenerate world line tangent: {0}")]
    DegenerateTangent(&'static str),

    #[error("invalid null ray: {0}")]
    InvalidNullRay(&'static str),

    #[error("event is not on the past horizon x1 = t (margin {0:e})")]
    NotOnHorizon(f64),

    #[error("operation requires an open region, got an equality set")]
    EqualityRegion,

    #[error("world line never crosses the throat t = 0")]
    NoThroatCrossing,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
