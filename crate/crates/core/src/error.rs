use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("cyclotomic order must be positive")]
    ZeroOrder,

    #[error("cyclotomic orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("1 - w^{m} is zero in order {n}; it has no inverse")]
    NotInvertible { n: usize, m: i64 },

    #[error("value is not rational: residue mod the cyclotomic polynomial has degree {degree}")]
    NotRational { degree: usize },

    #[error("result {value} is not an integer")]
    NonIntegral { value: BigRational },

    #[error("insertion degree {found} does not match the virtual dimension {expected}")]
    DimensionMismatch { expected: i64, found: i64 },

    #[error("regime violation: {0}")]
    RegimeViolation(String),

    #[error("invalid insertion: {0}")]
    InvalidInsertion(String),

    #[error("invalid problem: {0}")]
    InvalidSpec(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Internal invariant breaches, as opposed to bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::NotRational { .. } | Error::NonIntegral { .. } | Error::OrderMismatch { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
