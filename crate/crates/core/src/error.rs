use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid simple type {series}{rank}")]
    InvalidType { series: char, rank: usize },

    #[error("cannot parse '{0}' as a simple type")]
    UnknownType(String),

    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("elements belong to different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),

    #[error("grading is not integral on root {0:?}")]
    NonIntegralGrading(Vec<i64>),

    #[error("diagram has {got} marks, type {ty} needs {expected}")]
    DiagramLength {
        ty: String,
        expected: usize,
        got: usize,
    },

    #[error("mark {0} is outside {{0,1,2}}")]
    BadMark(i64),

    #[error("diagram {0} is not even")]
    NotEven(String),

    #[error("diagram {0} is not a weighted Dynkin diagram")]
    InvalidDiagram(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition sums to {got}, expected {expected}")]
    PartitionSize { expected: usize, got: usize },

    #[error("the zero orbit has no divisibility data")]
    ZeroOrbit,

    #[error("partition {0} is not divisible")]
    NotDivisible(String),

    #[error("element is zero")]
    ZeroElement,

    #[error("element is not nilpotent")]
    NotNilpotent,

    #[error("[h, e] != 2e for the supplied grading")]
    GradingMismatch,

    #[error("element is not in g^e(1)")]
    NotInDegreeOne,

    #[error("fingerprint collision in {ty}: {a} and {b}")]
    FingerprintCollision { ty: String, a: String, b: String },

    #[error("linear system has no solution")]
    Inconsistent,

    #[error("negative argument")]
    Negative,

    #[error("index ({0}, {1}) out of range")]
    OutOfRange(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
