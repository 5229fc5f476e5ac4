use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable `{name}` at byte {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("coefficient {0} is not representable in the field")]
    Unrepresentable(String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("arity mismatch: expected {expected} variables, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("too many variables: {0} (limit {max})", max = crate::poly::MAX_VARS)]
    TooManyVariables(usize),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("work budget of {limit} exceeded during {what}")]
    Budget { what: String, limit: u64 },
    #[error("cache error: {0}")]
    Cache(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
