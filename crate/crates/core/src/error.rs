//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Transitive closure produced a reflexive pair, i.e. the input relation
    /// contains a directed cycle through this vertex.
    #[error("relation has a cycle through vertex {0}")]
    CycleDetected(u32),

    #[error("vertex counts differ: {left} vs {right}")]
    MismatchedVertexCount { left: usize, right: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: usize,
        got: usize,
    },

    #[error("{what} index {got} out of range (limit {limit})")]
    IndexOutOfRange {
        what: &'static str,
        got: usize,
        limit: usize,
    },

    /// No simple d-regular graph exists: n*d is odd or d >= n.
    #[error("no simple {degree}-regular graph on {n} vertices")]
    InfeasibleDegree { n: usize, degree: usize },

    #[error("pairing model produced no simple graph in {attempts} attempts")]
    RejectionLimitExceeded { attempts: usize },

    #[error("sampling budget must be positive")]
    BudgetZero,

    #[error("operation requires an exact expansion certificate")]
    NonExactCertificate,

    #[error("vector dimensions differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("multiset sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("separating normal must be nonzero")]
    ZeroNormal,

    #[error("instance too large: n = {n} exceeds limit {limit}")]
    LimitExceeded { n: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
