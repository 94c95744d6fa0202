use thiserror::Error;

/// Every failure the library reports. Variant names follow the error codes
/// used by the JSON reports and the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("span mismatch: {0}")]
    SpanMismatch(String),
    #[error("boundary lattice is not of corank 1 (corank {corank})")]
    BadCorank { corank: usize },
    #[error("ambient dimension {dim} exceeds the configured cap {cap}")]
    DimCapExceeded { dim: usize, cap: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimMismatch { expected: usize, got: usize },
    #[error("arity mismatch: expected {expected} bodies, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("empty input: {0}")]
    Empty(String),
    #[error("affine hull is not rational")]
    NotRationalAffine,
    #[error("semigroup has no generators")]
    EmptyGenerators,
    #[error("nonzero generator {0:?} has level 0")]
    LevelZeroGenerator(Vec<i64>),
    #[error("negative level {level} in a non-negative semigroup")]
    NegativeLevel { level: i64 },
    #[error("operation requires a finitely generated semigroup")]
    NotFinitelyGenerated,
    #[error("operation requires a non-negative (level-graded) semigroup")]
    NotNonNegative,
    #[error("semigroup is not strongly admissible: {0}")]
    NotStronglyAdmissible(String),
    #[error("cone is not pointed; no positive grading exists")]
    NotPointed,
    #[error("inner cone is not inside the interior of Con(S): {0}")]
    ConeNotInterior(String),
    #[error("level {0} is empty")]
    EmptyLevel(i64),
    #[error("level {requested} is beyond the table truncation {truncation}")]
    BeyondTruncation { requested: usize, truncation: usize },
    #[error("the zero polynomial has no valuation")]
    ZeroPoly,
    #[error("basis is linearly dependent")]
    DependentBasis,
    #[error("term order functionals are not linearly independent")]
    DependentOrder,
    #[error("term orders differ")]
    OrderMismatch,
    #[error("support period m = {0}, expected 1")]
    MNotOne(i64),
    #[error("body has dimension {dim}, expected full dimension {expected}")]
    NotFullDimensional { dim: usize, expected: usize },
    #[error("graded component of degree {0} is zero")]
    EmptyComponent(usize),
    #[error("dimension of a power exceeds the configured bound {bound}")]
    PowerTooLarge { bound: usize },
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
