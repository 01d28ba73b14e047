use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("vector length {0} outside 1..={max}", max = crate::bitfam::MAX_N)]
    BadLength(usize),

    #[error("member index {index} out of range for family of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("duplicate member index {0}")]
    DuplicateIndex(usize),

    #[error("duplicate member {0}")]
    DuplicateMember(String),

    #[error("symbol {symbol} not below alphabet size {q}")]
    SymbolOutOfRange { symbol: u32, q: u32 },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),

    #[error("family is not {0}-uniform")]
    NonUniform(usize),

    #[error("pairwise symmetric-difference condition violated by pairs ({0}, {1}) and ({2}, {3})")]
    ConditionViolated(usize, usize, usize, usize),

    #[error("basis vectors are linearly dependent over GF(2)")]
    DependentBasis,

    #[error("no witness found: {0}")]
    NoWitness(String),

    #[error("inverse of zero")]
    ZeroInverse,

    #[error("not a supported field order: {0}")]
    UnsupportedField(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
