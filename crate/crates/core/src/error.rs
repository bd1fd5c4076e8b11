use thiserror::Error;

/// Errors raised by geometric and metric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("point is not in the interior of the cone")]
    NotInterior,

    #[error("point lies outside the closed cone")]
    Exterior,

    #[error("point is not on the boundary of the cone")]
    NotBoundary,

    #[error("the zero vector is not allowed here")]
    ZeroPoint,

    #[error("linear functional is identically zero")]
    ZeroFunctional,

    #[error("domain has empty interior")]
    EmptyInterior,

    #[error("polytope is unbounded")]
    Unbounded,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("logarithm argument must be positive, got {0}")]
    NonPositiveArgument(String),

    #[error("{what} exceeds the supported size (limit {limit})")]
    SizeGuard { what: &'static str, limit: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid Busemann point: {0}")]
    InvalidBusemann(String),

    #[error("Busemann points do not share the same cone and base point")]
    MismatchedBase,

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
