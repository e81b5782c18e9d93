//! Error vocabulary shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for family {family}")]
    InvalidRank { family: char, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("elements belong to different root systems")]
    SystemMismatch,

    #[error("vector is not a positive root of this system")]
    NotARoot,

    #[error("enumeration exceeded cap: at least {order_lower_bound} elements")]
    CapExceeded { order_lower_bound: usize },

    #[error("root is supported on the parabolic subsystem")]
    RootInParabolic,

    #[error("divisor multiplication is defined on codimension-graded classes")]
    GradingError,

    /// Raised when the degree-one nonvanishing check fails. The underlying
    /// statement holds for every admissible space, so this firing indicates
    /// an implementation bug rather than a property of the input.
    #[error("nonvanishing check failed: {reason}")]
    LemmaViolation { reason: String },

    #[error("product has no homogeneous factor to bound")]
    NoHomogeneousFactor,

    #[error("factor scaling must be nonzero")]
    ZeroScaling,

    #[error("Seshadri bound requires every scaling equal to 1")]
    ScaledFactorsUnsupported,

    #[error("Seshadri bound requires every factor to be a homogeneous space")]
    ClosedFactorUnsupported,
}

pub type Result<T> = std::result::Result<T, Error>;
