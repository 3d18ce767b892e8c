use thiserror::Error;

/// Errors produced by the polynomial machinery and the algorithms built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{0} must be a nonzero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,
    #[error("the zero polynomial has infinitely many roots")]
    InfiniteRoots,
    #[error("numerator and denominator must be coprime, common factor {0}")]
    NotCoprime(String),
    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("expression is not a polynomial: {0}")]
    NotPolynomial(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
