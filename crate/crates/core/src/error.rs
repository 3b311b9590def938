use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid operand: {0}")]
    InvalidOperand(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("unknown or inadmissible Coxeter type: {0}")]
    InvalidType(String),
    #[error("group has more than {limit} elements")]
    SizeExceeded { limit: usize },
    #[error("not an involution")]
    NotInvolution,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("simple reflection index {0} out of range")]
    InvalidIndex(usize),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
