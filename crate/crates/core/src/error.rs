use thiserror::Error;

/// Errors raised by geometric-arithmetic operations and the structures built
/// on top of them.
#[derive(Debug, Clone, Error)]
pub enum GeoError {
    /// Geometric division `u ⊘ v` with `v = 1` (the geometric zero).
    #[error("division by geometric zero (divisor equals 1)")]
    DivisionByGeometricZero,

    /// Input outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A function probe returned a value outside the geometric realm.
    #[error("evaluation error: {0}")]
    Evaluation(String),

    /// Sequence/table index outside the materialized range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// Norm exponent `p` outside `[1, ∞)`.
    #[error("invalid exponent p: {0}")]
    InvalidP(String),

    /// Incompatible matrix/sequence dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Interpolation abscissae coincide (or are closer than the tolerance).
    #[error("degenerate interpolation nodes: {0}")]
    DegenerateNodes(String),
}

pub type Result<T> = std::result::Result<T, GeoError>;
