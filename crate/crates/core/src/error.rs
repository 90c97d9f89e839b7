use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("field too large: {0}")]
    FieldTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element index {index} out of range for field of order {q}")]
    ElementOutOfRange { index: u64, q: u64 },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("polynomial degree {degree} exceeds order {order}")]
    DegreeExceedsOrder { degree: usize, order: usize },
    #[error("oracle too large: {0}")]
    OracleTooLarge(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("degenerate set: {0}")]
    DegenerateSet(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("reduction undefined: {0}")]
    BadRegime(String),
    #[error("bad length: expected {expected}, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("duplicate x-coordinate in interpolation points")]
    DuplicateX,
    #[error("empty sequence")]
    EmptySequence,
    #[error("decode failure: {0}")]
    DecodeFailure(String),
    #[error("parse error at token {position}: {message}")]
    Parse { position: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
