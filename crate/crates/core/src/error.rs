use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("generator counts differ: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("coefficients from Q(sqrt({left})) and Q(sqrt({right})) cannot be combined")]
    FieldMismatch { left: u64, right: u64 },
    #[error("generator count {n} outside supported range 1..={max}")]
    GeneratorCount { n: usize, max: usize },
    #[error("generator index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("degree {t} exceeds generator count {n}")]
    DegreeOutOfRange { t: usize, n: usize },
    #[error("radicand {0} is not a square-free integer greater than 1")]
    InvalidRadicand(u64),
    #[error("not invertible: real part is zero")]
    NotInvertible,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("outside the domain of the operation: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Contract(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("construction failed verification: {0}")]
    ConstructionFailed(String),
}
