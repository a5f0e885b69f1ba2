use thiserror::Error;

/// Errors produced by ring arithmetic, index bookkeeping and the determinant routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {left} vs {right}")]
    ContextMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("{dividend} is not exactly divisible by {divisor}")]
    NonExactDivision { dividend: String, divisor: String },

    #[error("ring {0} is not an integral domain")]
    NotIntegralDomain(String),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("indeterminate `{0}` has no binding")]
    UnboundIndeterminate(String),

    #[error("operation requires a polynomial ring, got {0}")]
    NotPolynomial(String),

    #[error("invalid ring specification `{0}`")]
    InvalidRingSpec(String),

    #[error("cannot parse `{literal}` as an element of {ring}: {reason}")]
    InvalidLiteral {
        literal: String,
        ring: String,
        reason: String,
    },

    #[error("invalid label `{0}`")]
    InvalidLabel(String),

    #[error("label {0} is not in the index set")]
    UnknownLabel(String),

    #[error("duplicate label {0}")]
    DuplicateLabel(String),

    #[error("successor label {0} must directly follow its base label")]
    DanglingSuccessor(String),

    #[error("subset does not belong to an index set of size {expected} (built for size {actual})")]
    ForeignSubset { expected: usize, actual: usize },

    #[error("subset size {k} out of range for an index set of size {n}")]
    SubsetSizeOutOfRange { k: usize, n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("Leibniz oracle is capped at {cap}x{cap}, got {size}x{size}")]
    OracleCapExceeded { size: usize, cap: usize },

    #[error("row or column operation needs two distinct labels, got {0} twice")]
    SameLabel(String),

    #[error("matrix must be at least {min}x{min}, got {size}x{size}")]
    TooSmall { size: usize, min: usize },

    #[error("matrix file line {line}: {reason}")]
    MatrixFile { line: usize, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
