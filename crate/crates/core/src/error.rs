use alloc::string::String;

/// Errors raised by kernel evaluation, operator construction and evaluation,
/// and the modular functionals.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("non-finite argument {0} passed to a kernel")]
    NonFiniteInput(f64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error(
        "invalid box domain on axis {axis}: lower {lower} must be finite and below upper {upper}"
    )]
    InvalidDomain { axis: usize, lower: f64, upper: f64 },

    #[error(
        "empty index set on axis {axis}: ceil(n*a) = {lo} exceeds floor(n*b) - 1 = {hi} (n = {n})"
    )]
    EmptyIndexSet {
        axis: usize,
        n: u32,
        lo: i64,
        hi: i64,
    },

    #[error("shape mismatch: expected {expected} values, got {got}")]
    ShapeMismatch { expected: usize, got: usize },

    #[error("non-finite value {value} in cell {cell}")]
    NonFiniteValue { cell: String, value: f64 },

    #[error("point {coordinate} on axis {axis} lies outside [{lower}, {upper}]")]
    OutsideDomain {
        axis: usize,
        coordinate: f64,
        lower: f64,
        upper: f64,
    },

    #[error(
        "kernel denominator {0} is not positive; the kernel violates the sigmoidal conditions"
    )]
    DegenerateDenominator(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = core::result::Result<T, Error>;
