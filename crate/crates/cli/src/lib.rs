//! File formats, DOT export, report rendering and the reproduction suite
//! behind the `fintop` binary.

pub mod dot;
pub mod format;
pub mod render;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown element `{label}`")]
    UnknownLabel { line: usize, label: String },
    #[error(transparent)]
    Poset(#[from] fintop::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, Error>;
