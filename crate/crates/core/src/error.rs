use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("element {0} does not lie in the valuation domain")]
    NotInDomain(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid domain specification `{0}`")]
    InvalidDomain(String),
    #[error("{numerator} is not divisible by {denominator} in the valuation domain")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },
    #[error("all coefficients are zero")]
    AllZero,
    #[error("pivot index ({index}, {exponent}) out of range for a vector with {n} components")]
    IndexOutOfRange {
        index: usize,
        exponent: usize,
        n: usize,
    },
    #[error("vector is not primitive (no coordinate is a unit)")]
    NotPrimitive,
    #[error("zero vector")]
    ZeroVector,
    #[error("empty family")]
    EmptyFamily,
    #[error("empty input: no nonzero vector")]
    EmptyInput,
    #[error("iteration cap of {0} reached before the defect vanished")]
    IterationCapExceeded(usize),
    #[error("vector of degree {degree} exceeds the degree bound {bound}")]
    DegreeExceeded { degree: usize, bound: usize },
    #[error("dimension mismatch: expected {expected} components, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
