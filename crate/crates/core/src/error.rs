use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero function")]
    DivisionByZero,

    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },

    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("representation has no matrix for generator {0}")]
    MissingGenerator(String),

    #[error("representations are defined over different (m, n)")]
    ParamsMismatch,

    #[error("dimension {dim} exceeds the configured cap {cap}")]
    ResourceLimit { dim: usize, cap: usize },

    #[error("K_{0} is not diagonal in the working basis")]
    NotSimultaneouslyDiagonal(usize),

    #[error("m = n is unsupported: the quantum dimension of V vanishes")]
    EqualMNUnsupported,

    #[error("braid letter {letter} does not fit on {strands} strands")]
    StrandMismatch { letter: i64, strands: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn syntax<T>(pos: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Syntax { pos, msg: msg.into() })
}
