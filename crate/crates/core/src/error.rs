use thiserror::Error;

/// Errors raised by constructions and group computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("{what} exceeded the cap of {cap} elements")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("operands belong to different structures: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
