//! Configuration, presets and report writers behind the `niba` binary.

use std::path::PathBuf;

pub mod commands;
pub mod config;
pub mod presets;

pub use config::{load_config, RunConfig, Setup};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(String),
    #[error("invalid config: {field} {constraint}")]
    Invalid { field: String, constraint: String },
    #[error("conflicting config: {0}")]
    Conflict(String),
    #[error("unknown preset `{0}` (available: fmo77, fmo277, pc645)")]
    UnknownPreset(String),
    #[error(transparent)]
    Model(#[from] niba_core::Error),
    #[error("write failed: {0}")]
    Write(#[from] std::io::Error),
}

/// Process exit status: 0 ok, 1 error, 2 regime warning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Error = 1,
    RegimeWarning = 2,
}
