use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a supported prime (need a prime 2 <= p <= {max})", max = crate::arith::MAX_P)]
    BadPrime(i64),
    #[error("mixed primes: {0} and {1}")]
    PrimeMismatch(u32, u32),
    #[error("malformed grading: {0}")]
    MalformedGrading(String),
    #[error("grading {0} is not in RO_0(G)")]
    NotInRo0(String),
    #[error("index {0} is divisible by p")]
    ZeroIndex(i64),
    #[error("grading mismatch: {0}")]
    GradingMismatch(String),
    #[error("level mismatch: {0}")]
    LevelMismatch(String),
    #[error("undefined product: {0}")]
    UndefinedProduct(String),
    #[error("coordinates {coords} do not lie in the lattice of {cell}")]
    Lattice { cell: String, coords: String },
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("bad congruence: {0}")]
    BadCongruence(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("normalization failed: {0}")]
    Normalize(String),
}

pub type Result<T> = std::result::Result<T, Error>;
