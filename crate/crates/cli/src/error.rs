use catalan_tasep::Error as CoreError;
use thiserror::Error;

/// Everything a command can fail with, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or flag values.
    #[error("usage: {0}")]
    Usage(String),

    /// Input that is not well-formed JSON or does not match the wire shape.
    #[error("parse error: {0}")]
    Parse(String),

    /// Well-formed input describing an object that violates its invariants.
    #[error("invalid object: {0}")]
    Invalid(String),

    #[error("no map from {from} to {to}; supported: {supported}")]
    UnsupportedMap {
        from: String,
        to: String,
        supported: String,
    },

    #[error("{0}")]
    Cap(CoreError),

    /// One or more verification checks failed.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Core(CoreError),
}

impl CliError {
    pub const EXIT_VERIFICATION: u8 = 1;
    pub const EXIT_USAGE: u8 = 2;
    pub const EXIT_CAP: u8 = 3;
    pub const EXIT_INVALID: u8 = 4;
    pub const EXIT_UNSUPPORTED: u8 = 5;
    pub const EXIT_INTERNAL: u8 = 70;

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => Self::EXIT_VERIFICATION,
            CliError::Usage(_) | CliError::Parse(_) => Self::EXIT_USAGE,
            CliError::Cap(_) => Self::EXIT_CAP,
            CliError::Invalid(_) => Self::EXIT_INVALID,
            CliError::UnsupportedMap { .. } => Self::EXIT_UNSUPPORTED,
            CliError::Io(_) => Self::EXIT_USAGE,
            CliError::Core(_) => Self::EXIT_INTERNAL,
        }
    }

    /// Core validation failures on parsed input.
    pub(crate) fn invalid(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { .. } => CliError::Cap(e),
            e => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::CapExceeded { .. } => CliError::Cap(e),
            CoreError::InvalidRate { .. } | CoreError::InvalidArgument(_) => {
                CliError::Usage(e.to_string())
            }
            CoreError::Internal(_) | CoreError::Singular => CliError::Core(e),
            e => CliError::Invalid(e.to_string()),
        }
    }
}
