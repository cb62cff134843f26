use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("{key}: {msg}")]
    Domain { key: String, msg: String },

    #[error(transparent)]
    Model(#[from] cavity_coherence::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("validation failed: {0}")]
    Validation(String),
}

impl CliError {
    /// 1 for usage/config problems, 2 for numerical or I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Syntax { .. } | CliError::Domain { .. } => 1,
            CliError::Model(cavity_coherence::Error::Numerical { .. }) => 2,
            CliError::Model(_) => 1,
            CliError::Io { .. } | CliError::Validation(_) => 2,
        }
    }

    pub fn domain(key: impl Into<String>, msg: impl Into<String>) -> Self {
        CliError::Domain {
            key: key.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
