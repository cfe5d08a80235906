//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,

    #[error("cannot parse scalar {input:?}: {reason}")]
    ParseScalar { input: String, reason: String },

    #[error("vector length {got} does not match dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("zero coefficient stored for product ({left},{right}) -> e{result}")]
    ZeroCoefficient {
        left: usize,
        right: usize,
        result: usize,
    },

    #[error("duplicate result index {result} in product ({left},{right})")]
    DuplicateResultIndex {
        left: usize,
        right: usize,
        result: usize,
    },

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("element lies in the square of the algebra")]
    ElementInSquare,

    #[error("algebra equals its own square; no generator outside it")]
    NoGeneratorOutsideSquare,

    #[error("sampling failed: could not draw a vector outside the square")]
    SamplingFailed,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("invalid basis split: {0}")]
    InvalidSplit(String),

    #[error("gradation inconsistent with the algebra: {0}")]
    InconsistentGradation(String),

    #[error("algebra is not naturally graded in the presented basis")]
    NotNaturallyGraded,

    #[error("enumeration budget exceeded: {combinations} assignments > budget {budget}")]
    BudgetExceeded { combinations: u128, budget: u128 },

    #[error("assignment covers {got} unknowns, system has {expected}")]
    AssignmentMismatch { expected: usize, got: usize },

    #[error("document error: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
