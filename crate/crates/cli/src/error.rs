use thiserror::Error;

/// CLI failures, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: u64, column: usize, message: String },
    #[error("cannot convert from {from} to {to}: different regimes")]
    RegimeMismatch { from: &'static str, to: &'static str },
    #[error("invalid input: {0}")]
    Input(quatmotion::Error),
    #[error("numeric domain error: {0}")]
    Numeric(quatmotion::Error),
    #[error("I/O error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Schema(_) | CliError::Parse { .. } | CliError::RegimeMismatch { .. } | CliError::Input(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io { .. } => 4,
        }
    }
}

impl From<quatmotion::Error> for CliError {
    /// Malformed rate series count as input errors; everything else is a
    /// numeric-domain failure.
    fn from(e: quatmotion::Error) -> Self {
        use quatmotion::Error::*;
        match e {
            EmptyRateSeries | NonmonotoneTime { .. } | InvalidStep(_) | OutOfRange { .. } => CliError::Input(e),
            _ => CliError::Numeric(e),
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        if e.is_io() {
            CliError::Io { path: "<stream>".into(), source: e.into() }
        } else {
            CliError::Schema(e.to_string())
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
