use std::io;
use std::path::PathBuf;

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const VERIFICATION_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RESOURCE_LIMIT: u8 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] trifree_core::Error),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("output: {0}")]
    Output(#[from] io::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{context}: {message}")]
    Format { context: String, message: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn format(context: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Format { context: context.into(), message: message.into() }
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    pub fn exit_code(&self) -> u8 {
        use trifree_core::Error as E;
        match self {
            CliError::Core(E::LimitExceeded { .. } | E::TooManyVertices { .. }) => exit::RESOURCE_LIMIT,
            _ => exit::USAGE,
        }
    }

    /// A hint printed after the message, if any.
    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(trifree_core::Error::LimitExceeded { what, .. }) if what.contains("covered") => {
                Some("use `trifree mc` for a Monte Carlo estimate")
            }
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
