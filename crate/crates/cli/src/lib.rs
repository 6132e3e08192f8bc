//! File formats, reports and subcommands for the `strandtrace` binary.

pub mod commands;
pub mod format;
pub mod report;

pub use report::{Format, Report, Status};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Core(#[from] strandtrace_core::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
