use thiserror::Error;

use crate::algebra::Shape;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: Shape, found: Shape },

    #[error("entry {value} is not a valid {alphabet} symbol")]
    BadEntry { value: u8, alphabet: &'static str },

    #[error("enumeration guard exceeded: code needs 2^{needed} words, guard is 2^{guard}")]
    GuardExceeded { needed: usize, guard: usize },

    #[error("the zero code has no minimum distance")]
    ZeroCode,

    #[error("invalid monomial: {0}")]
    InvalidMonomial(String),

    #[error("invalid code type: {0}")]
    InvalidType(String),

    #[error("matrix has no (1..1|2..2) row in its row space; cannot puncture")]
    NoParityRow,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    #[error("unknown matrix name `{0}`")]
    UnknownMatrix(String),

    #[error("family mismatch: {0}")]
    FamilyMismatch(String),

    #[error("exhaustive orbit of size {size} exceeds ceiling {ceiling}")]
    OrbitTooLarge { size: u128, ceiling: u128 },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
