//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("config error: {0}")]
    Config(String),

    #[error("placement failed after {attempts} rejection-sampling attempts")]
    Placement { attempts: usize },

    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    #[error("replay pool holds {len} transitions, need {need}")]
    PoolUnderfilled { len: usize, need: usize },

    #[error("architecture mismatch: {0}")]
    ArchMismatch(String),

    #[error("unsupported mode: {0}")]
    Mode(String),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
