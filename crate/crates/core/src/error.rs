use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degenerate presentation (d, e) = ({d}, {e}): e^2 + 4d = {disc} is a perfect square")]
    DegeneratePresentation { d: i64, e: i64, disc: i128 },

    #[error("mismatched ring presentations: {left} vs {right}")]
    ParamsMismatch { left: String, right: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error(
        "discriminant {0} is not negative; only imaginary quadratic orders are supported here"
    )]
    NonImaginary(i128),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("lifting-the-exponent precondition violated: {p} does not divide {a} - 1")]
    LtePrecondition { p: u64, a: String },

    #[error("lifting-the-exponent formula gives {formula} but direct factor-out gives {direct}")]
    LteMismatch { formula: String, direct: String },

    #[error("exponent must be positive")]
    ZeroExponent,

    #[error("exponent {0} must be odd")]
    EvenExponent(u64),

    #[error("exponent {0} must be at least 3")]
    ExponentTooSmall(u64),

    #[error("m = {0} does not satisfy the theta equation")]
    NotAWitness(u64),

    #[error("invalid bound {name} = {value}: must be positive")]
    InvalidBound { name: &'static str, value: u64 },

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
