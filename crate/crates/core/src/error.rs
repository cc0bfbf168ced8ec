use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient fields do not match")]
    FieldMismatch,
    #[error("variable counts do not match: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("matrix is not square: {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },
    #[error("matrix dimension mismatch: {detail}")]
    DimensionMismatch { detail: String },
    #[error("polynomial is not homogeneous")]
    NonHomogeneous,
    #[error("degree {degree} below minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("degrees do not match: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("zero vector not allowed here")]
    ZeroVector,
    #[error("zero entry not allowed here")]
    ZeroEntry,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} exceeds the supported bound 2^31")]
    PrimeTooLarge(u64),
    #[error("hessian of the pencil vanishes identically in the pencil parameter")]
    PencilHessianZero,
    #[error("hessian does not vanish identically")]
    HessianNonzero,
    #[error("expected proportional polynomials; they are not")]
    NotProportional,
    #[error("linear forms violate general position")]
    GeneralPositionViolation,
    #[error("polynomial not in the span of the basis; residual {residual}")]
    NotInSpan { residual: String },
    #[error("interpolation produced a space of dimension {found}, expected {expected}")]
    InterpolationDimension { expected: usize, found: usize },
    #[error("gradient vanishes at the given point")]
    ZeroGradient,
    #[error("coefficient map target dimension {dim} exceeds bound {bound}")]
    TargetTooLarge { dim: usize, bound: usize },
    #[error("enumeration needs about {needed} bytes, over the {budget} byte budget")]
    MemoryBudget { needed: u64, budget: u64 },
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
