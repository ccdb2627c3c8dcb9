use thiserror::Error;

use crate::tableau::Violation;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("not a Catalan tableau: {0}")]
    InvalidTableau(Violation),

    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("invalid polyomino: {0}")]
    InvalidPolyomino(String),

    #[error("invalid pair of paths: {0}")]
    InvalidPair(String),

    #[error("{what} size {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },

    #[error("invalid rate {name} = {value}: must lie in (0, 1]")]
    InvalidRate { name: &'static str, value: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular linear system")]
    Singular,

    /// An internal consistency check failed; this is a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
