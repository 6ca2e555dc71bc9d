use thiserror::Error;

/// Errors produced by the library.
///
/// Callers that need to distinguish resource guards from malformed input
/// can use [`Error::is_guard`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("64-bit arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("inexact division while computing {0}")]
    InexactDivision(&'static str),

    #[error("{what} = {value} exceeds the enumeration guard {limit}")]
    GuardExceeded { what: &'static str, value: u64, limit: u64 },

    #[error("s = {s} and t = {t} must be coprime, distinct and positive")]
    NotCoprime { s: u64, t: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid beta-set: {0}")]
    InvalidBetaSet(String),

    #[error("not an order ideal of {poset}: {reason}")]
    NotAnIdeal { poset: String, reason: String },

    #[error("order ideal is not nice: it contains both {0} and {1}")]
    NotNice(u64, u64),

    #[error("ideal belongs to {found}, expected {expected}")]
    ForeignPoset { expected: String, found: String },

    #[error("invalid lattice path: {0}")]
    InvalidPath(String),

    #[error("index out of bounds: {0}")]
    OutOfBounds(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }

    pub(crate) fn guard(what: &'static str, value: u64, limit: u64) -> Self {
        Error::GuardExceeded { what, value, limit }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
