use thiserror::Error;

/// Errors raised by the exact linear algebra and the constructions built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in the supported range 2..=251")]
    InvalidPrime(u32),

    #[error("field mismatch: GF({left}) vs GF({right})")]
    FieldMismatch { left: u32, right: u32 },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("matrix is singular")]
    Singular,

    #[error("matrix is not unipotent")]
    NotUnipotent,

    #[error("matrix is not an isometry of the given form")]
    NotIsometry,

    #[error("operation requires characteristic {expected}, got {actual}")]
    WrongCharacteristic { expected: u32, actual: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("search exhausted {cap} candidates without a witness: {what}")]
    SearchExhausted { what: String, cap: u64 },

    #[error("enumeration of {lines} lines exceeds the cap of {cap}")]
    CapExceeded { lines: u128, cap: u64 },

    #[error("no nondegenerate invariant form: {0}")]
    NoNondegenerateForm(String),

    #[error("proposition violated: {0}")]
    PropositionViolated(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
