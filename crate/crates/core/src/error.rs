use thiserror::Error;

/// Errors produced by the threshold-graph toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid block form: {0}")]
    InvalidBlocks(String),

    #[error("graph is disconnected (creation sequence must end in 1)")]
    Disconnected,

    #[error("{what} out of range: {detail}")]
    OutOfRange { what: &'static str, detail: String },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial is not divisible")]
    NotDivisible,

    #[error("zero polynomial has no isolated roots")]
    ZeroPolynomial,

    #[error("matrix is not square")]
    NonSquare,

    #[error("matrix is not a symmetric 0/1 matrix with zero diagonal")]
    NotAdjacency,

    #[error("invalid number {0:?}")]
    InvalidNumber(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    /// Short stable identifier, used in machine-readable error lines and by the C API.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidBlocks(_) => "invalid-blocks",
            Error::Disconnected => "disconnected",
            Error::OutOfRange { .. } => "out-of-range",
            Error::DivisionByZero => "division-by-zero",
            Error::NotDivisible => "not-divisible",
            Error::ZeroPolynomial => "zero-polynomial",
            Error::NonSquare => "non-square",
            Error::NotAdjacency => "not-adjacency",
            Error::InvalidNumber(_) => "invalid-number",
            Error::Internal(_) => "internal",
        }
    }

    pub(crate) fn out_of_range(what: &'static str, detail: impl Into<String>) -> Self {
        Error::OutOfRange {
            what,
            detail: detail.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
