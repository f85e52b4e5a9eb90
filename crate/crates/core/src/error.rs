use alloc::string::String;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    #[error("constant term is not invertible")]
    NotInvertible,

    #[error("infinite product with a q^0 factor does not converge formally")]
    DivergentProduct,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("argument {x} outside the domain {domain}")]
    Domain { x: f64, domain: &'static str },

    #[error("unknown series name `{0}`")]
    UnknownSeries(String),

    #[error("1/A + 1/B + 1/C = {0} must be below 1")]
    ConstraintViolation(f64),

    #[error("inequality hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("generating-function source is only available for odd vs distinct with t in {{2, 3}}")]
    UnsupportedSource,
}

pub type Result<T> = core::result::Result<T, Error>;
