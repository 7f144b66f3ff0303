use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty partition")]
    EmptyPartition,
    #[error("invalid row: {0}")]
    InvalidRow(String),
    #[error("n = {n} is smaller than the length {len} of the partition")]
    TooShort { n: usize, len: usize },
    #[error("not a point of the Thoma simplex: {0}")]
    InvalidSimplexPoint(String),
    #[error("size {size} exceeds the cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("order {0} must be even")]
    OddOrder(u32),
    #[error("argument outside the analytic domain: {0}")]
    DomainError(String),
    #[error("quadrature did not converge: {0}")]
    QuadratureError(String),
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("distribution has zero variance")]
    DegenerateDistribution,
    #[error("measure has positive mass at 0")]
    ZeroAtomUnsupported,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
