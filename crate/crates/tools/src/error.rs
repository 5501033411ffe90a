use std::io;
use std::path::PathBuf;

use impartial_core::{Error, ParseError};

/// Process exit codes of the `impartial` binary.
pub mod exit {
    pub const OK: u8 = 0;
    pub const VERIFY_FAILED: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const SIZE_GUARD: u8 = 3;
}

#[derive(Debug, thiserror::Error)]
pub enum ToolError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: invalid JSON graph: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Output(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl ToolError {
    pub fn exit_code(&self) -> u8 {
        match self {
            ToolError::Core(Error::SizeGuard { .. }) => exit::SIZE_GUARD,
            _ => exit::USAGE,
        }
    }
}

pub type Result<T, E = ToolError> = std::result::Result<T, E>;
