use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("failed to read {path}: {source}")]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("failed to write {path}: {source}")]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{0} is not valid UTF-8")]
    Utf8(String),
    #[error("empty corpus")]
    EmptyCorpus,
    #[error("empty matrix")]
    EmptyMatrix,
    #[error("insufficient samples: need at least {needed}, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),
    #[error("invalid component count {k} for dimension {d}")]
    InvalidComponents { k: usize, d: usize },
    #[error("corpus too small: {0} sentence(s)")]
    CorpusTooSmall(usize),
    #[error("sample too small: need at least {needed}, got {got}")]
    SampleTooSmall { needed: usize, got: usize },
    #[error("zero variance sample")]
    ZeroVariance,
    #[error("non-finite value in input")]
    NonFinite,
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("every corpus was skipped; nothing to report")]
    EmptyTable,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
