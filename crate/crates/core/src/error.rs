use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("operands live in different free modules")]
    AmbientMismatch,
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("element of degree zero: {0}")]
    DegreeZeroElement(String),
    #[error("the zero module has no {0}")]
    ZeroModule(&'static str),
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("module has infinite length (dimension {0})")]
    InfiniteLength(i64),
    #[error("not a system of parameters: {0}")]
    NotSop(String),
    #[error("ideal is not monomial: {0}")]
    NotMonomial(String),
    #[error("the unit ideal has no {0}")]
    UnitIdeal(&'static str),
    #[error("no {kind} sequence of length {length} found after {attempts} attempts")]
    NotFound { kind: String, length: usize, attempts: usize },
    #[error("no sequential element exists: the maximal ideal is attached to H^{0}")]
    NoSequentialElement(usize),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
