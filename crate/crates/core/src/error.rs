use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("invalid norm exponent {0}: must lie in [1, inf]")]
    InvalidExponent(f64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("metric violates {0}")]
    NotAMetric(String),
    #[error("grade index {index} out of range (have {len} grades)")]
    GradeOutOfRange { index: usize, len: usize },
    #[error("subdivision would exceed the cell cap of {cap}")]
    CellCapExceeded { cap: usize },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("linear program anomaly: {0}")]
    LinearProgram(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
