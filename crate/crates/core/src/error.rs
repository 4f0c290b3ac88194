use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by an identically zero series")]
    DivisionByZero,
    #[error("order underflow: result would only be known to order {0}")]
    OrderUnderflow(i64),
    #[error("square root of a series with odd valuation {0}")]
    OddValuation(i64),
    #[error("leading coefficient {0} is not the square of a rational")]
    NonSquareLeading(String),
    #[error("cannot evaluate a series of valuation {0} at zero")]
    PoleAtZero(i64),
    #[error("composition needs coefficients beyond the reliable order: {0}")]
    Composition(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("branch selection failed: {0}")]
    Branch(String),
    #[error("identity failed: {identity} (first bad coefficient at t^{index})")]
    Identity { identity: String, index: i64 },
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("precision: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
