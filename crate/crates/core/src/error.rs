use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field GF(2^{n}) with modulus {modulus:#x}: {reason}")]
    InvalidField {
        n: u32,
        modulus: u32,
        reason: &'static str,
    },
    #[error("elements belong to different fields")]
    FieldMismatch,
    #[error("value {value} is not an element of GF(2^{n})")]
    ElementOutOfRange { value: u64, n: u32 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("table has length {got}, expected {expected}")]
    TableLength { expected: usize, got: usize },
    #[error("function is not a permutation")]
    NotPermutation,
    #[error("not a cover: {0}")]
    NotACover(String),
    #[error("instance too large for direct enumeration: {0}")]
    Capacity(String),
    #[error("internal error: inexact division in {0}")]
    InexactDivision(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
