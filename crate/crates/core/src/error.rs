use thiserror::Error;

use crate::classify::Rejection;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("class functions live on different groups: S_{left} vs S_{right}")]
    MismatchedGroup { left: usize, right: usize },

    #[error("not a virtual character: inner product with χ{partition} is {value}")]
    NotVirtualCharacter { partition: String, value: String },

    #[error("not a character: multiplicity of χ{partition} is {value}")]
    NegativeMultiplicity { partition: String, value: String },

    #[error("transposition ({i} {j}) is neither adjacent nor a column pair of the tableau")]
    UnsupportedTransposition { i: usize, j: usize },

    #[error("coefficient of t^{degree} is beyond the truncation bound {bound}")]
    BeyondBound { degree: usize, bound: usize },

    #[error("series is truncated; an exact (polynomial) graded character is required")]
    NotExact,

    #[error("top coefficient has dimension {0}, expected a one-dimensional socle")]
    SocleNotOneDimensional(String),

    #[error("invalid representation type: {0}")]
    InvalidRepresentationType(String),

    #[error("representation type rejected: {0}")]
    Rejected(Rejection),

    #[error("invalid multiset: {0}")]
    InvalidMultiset(String),

    #[error("generator {index} is not homogeneous")]
    NonHomogeneous { index: usize },

    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },

    #[error("generators involve {found} variables but the ring has {expected}")]
    VariableCount { expected: usize, found: usize },

    #[error("generator span is not stable under the symmetric group")]
    NotStable,

    #[error("trace is not an integer: {0}")]
    NonIntegralTrace(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
