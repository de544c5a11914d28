use num_bigint::BigUint;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not prime: {0}")]
    NotPrime(u64),

    #[error("not a prime power: {0}")]
    NotPrimePower(BigUint),

    #[error("bad degree: {0}")]
    BadDegree(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("enumeration cap exceeded: {size} elements > cap {cap} (use --force or TRACECURVE_CAP)")]
    CapExceeded { size: u128, cap: u64 },

    #[error("{k} does not divide {m}")]
    NotDivisor { k: u32, m: u32 },

    #[error("invalid curve parameters: {0}")]
    InvalidParams(String),

    #[error("alpha undefined: x = 0")]
    AlphaUndefined,

    #[error("hypothesis violated: alpha must not be 0 or 1")]
    HypothesisViolated,

    #[error("factorization incomplete for {0}")]
    FactorizationIncomplete(BigUint),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("symbolic computation failed: {0}")]
    Symbolic(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
