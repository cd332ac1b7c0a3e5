use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("need at least 3 weights, got {0}")]
    TooFewWeights(usize),
    #[error("duplicate weight {0}")]
    DuplicateWeights(i64),
    #[error("weights must be positive, got {0}")]
    NonPositiveWeight(i64),
    #[error("weights {0:?} are not strictly decreasing and coprime")]
    NotNormalized(Vec<i64>),
    #[error("degree d must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("condition c{i},{j} is out of range for n = {n}")]
    ConditionOutOfRange { n: usize, i: usize, j: usize },
    #[error("dimension mismatch: {0} vs {1} variables")]
    DimensionMismatch(usize, usize),
    #[error("S must be a diagonal field with integer weights")]
    NotDiagonal,
    #[error("the zero field has no quasi-homogeneous weight")]
    ZeroField,
    #[error("exterior derivative of a top-degree form (grade {0})")]
    GradeOverflow(usize),
    #[error("expected a form of grade {expected}, got {got}")]
    GradeMismatch { expected: usize, got: usize },
    #[error("chart {chart} is out of range for n = {n}")]
    ChartOutOfRange { chart: usize, n: usize },
    #[error("input field is not quasi-homogeneous of weight {0} with respect to S")]
    NonQuasiHomogeneousInput(i64),
    #[error("the pulled-back form has a pole that no monomial clears")]
    UnclearedPole,
    #[error("the family is empty (dim W_0 = 0)")]
    EmptyFamily,
    #[error("the basis is empty")]
    EmptyBasis,
    #[error("only n = 3 and n = 4 have closed-form enumerations, got n = {0}")]
    UnsupportedN(usize),
    #[error("n must be at least 3, got {0}")]
    InvalidN(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
