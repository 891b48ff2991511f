use thiserror::Error;

/// Errors reported by the exact-arithmetic and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial not allowed")]
    ZeroPolynomial,

    #[error("constant polynomial has no root bound")]
    ConstantPolynomial,

    #[error("polynomial is not square-free")]
    NotSquareFree,

    #[error("endpoint {0} is a root of the polynomial")]
    EndpointIsRoot(String),

    #[error("both gcd arguments are zero")]
    GcdOfZeros,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("first term of the sequence is zero")]
    LeadingTermZero,

    #[error("not enough terms: need {needed}, got {got}")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search budget exhausted after {0} trials")]
    BudgetExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
