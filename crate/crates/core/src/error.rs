//! Crate-wide error type.

use thiserror::Error;

/// Broad failure class, used by callers (e.g. the CLI) to map errors onto
/// exit codes without matching every variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Invalid configuration or arguments.
    Config,
    /// Bad, missing, or inconsistent input data / file formats.
    Data,
    /// Numerical failure (divergence, non-finite values).
    Numeric,
    /// Underlying I/O failure.
    Io,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {detail}")]
    ShapeMismatch { op: String, detail: String },

    #[error("unbound graph input '{0}'")]
    UnboundInput(String),

    #[error("non-finite values produced by {op}{}", context.as_ref().map(|c| format!(" ({c})")).unwrap_or_default())]
    NonFinite {
        op: String,
        context: Option<String>,
    },

    #[error("training diverged (non-finite loss) at epoch {epoch}")]
    Divergence { epoch: usize },

    #[error("invalid architecture: {0}")]
    InvalidArch(String),

    #[error("invalid config: {0}")]
    InvalidConfig(String),

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("bad file format: {0}")]
    Format(String),

    #[error("checksum mismatch: {0}")]
    Checksum(String),

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::ShapeMismatch { .. } | Error::UnboundInput(_) => ErrorClass::Data,
            Error::NonFinite { .. } | Error::Divergence { .. } => ErrorClass::Numeric,
            Error::InvalidArch(_) | Error::InvalidConfig(_) => ErrorClass::Config,
            Error::InsufficientData(_) | Error::Format(_) | Error::Checksum(_) => ErrorClass::Data,
            Error::Io { .. } => ErrorClass::Io,
        }
    }

    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }

    pub(crate) fn shape(op: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::ShapeMismatch {
            op: op.into(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
