use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rational function: zero denominator")]
    ZeroDenominator,

    #[error("division by zero")]
    DivisionByZero,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("operator does not preserve the quasi-polynomial family: {0}")]
    NonClosure(String),

    #[error("integration failed: {0}")]
    Integration(String),

    #[error("polynomial degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("operator order {order} exceeds bound {bound}")]
    OrderBound { order: u32, bound: u32 },

    #[error("identity check failed: {0}")]
    Residual(String),

    #[error("numeric solver: {0}")]
    Numeric(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
