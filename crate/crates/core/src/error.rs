use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("prime {0} is outside the supported range 3..=97")]
    PrimeOutOfRange(u32),
    #[error("no inverse: {0} is not a unit")]
    NoInverse(u32),
    #[error("not a Gray image: {0}")]
    NotGrayImage(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("entry {value} out of range at position {position} (must be < {bound})")]
    EntryOutOfRange {
        position: usize,
        value: u32,
        bound: u32,
    },
    #[error("invalid code type: {0}")]
    InvalidType(String),
    #[error("invalid generator matrix: {0}")]
    InvalidGenerators(String),
    #[error("enumeration needs {required} codewords but the cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
