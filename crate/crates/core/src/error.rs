use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("exponent overflow: variable exponent exceeds {max}")]
    ExponentOverflow { max: u32 },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("operation requires a block order with auxiliary variables")]
    NotBlockOrder,
    #[error("ideal is not cofinite (contains no power of the maximal ideal)")]
    NotCofinite,
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("group {group} is incompatible with {space} deformations: {reason}")]
    IncompatibleGroup {
        group: String,
        space: String,
        reason: String,
    },
    #[error("S-pair budget of {budget} exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("division by zero")]
    DivisionByZero,
}

pub type Result<T> = std::result::Result<T, Error>;
