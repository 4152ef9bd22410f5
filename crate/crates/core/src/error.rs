use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("algebra dimension {0} outside supported range 1..={max}", max = crate::clifford::MAX_DIM)]
    InvalidDimension(usize),

    #[error("zero paravector has no inverse")]
    ZeroInverse,

    #[error("real paravector has no canonical unit")]
    RealParavector,

    #[error("argument {re} + I*{im} lies on the branch cut (-inf, 0]")]
    BranchCut { re: f64, im: f64 },

    #[error("singular point: s lies on the sphere [x] (distance {distance:e})")]
    SingularPoint { distance: f64 },

    #[error("point lies outside or on the contour (|x - c0| = {distance}, radius {radius})")]
    OutsideContour { distance: f64, radius: f64 },

    #[error("frequency xi = 0 is excluded")]
    ZeroFrequency,

    #[error("grid does not resolve the test function: {0}")]
    UnderResolved(String),

    #[error("quadrature did not converge: {0}")]
    NoConvergence(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
