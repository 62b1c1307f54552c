use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field size {p}^{k} exceeds the supported bound of 2^16")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("modulus {0:?} is not a monic irreducible polynomial of the requested degree")]
    InvalidModulus(Vec<u32>),
    #[error("element value {value} is out of range for GF({q})")]
    InvalidElement { value: u32, q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot normalize the zero vector")]
    ZeroVector,
    #[error("points must be distinct")]
    SamePoint,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("degree {d} violates the restriction d <= {max}")]
    DegreeTooLarge { d: u32, max: u32 },
    #[error("size {size} exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },
    #[error("duplicate evaluation parameter")]
    DuplicateParam,
    #[error("expected {expected} evaluation pairs, got {actual}")]
    PairCount { expected: usize, actual: usize },
    #[error("invalid code specification: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
