//! Crate-wide error type.

use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by construction, distance computation, evaluation and I/O.
#[derive(Debug, Error)]
pub enum Error {
    #[error("series {id:?} is empty")]
    EmptySeries { id: String },

    #[error("series {id:?}: {len} values do not form whole points of dimension {dim}")]
    RaggedData { id: String, len: usize, dim: usize },

    #[error("series {id:?}: non-finite component at point {index}")]
    NonFinite { id: String, index: usize },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("length mismatch: {left} vs {right} (lock-step distance needs equal lengths)")]
    LengthMismatch { left: usize, right: usize },

    #[error("series too short: length {len}, need at least {required}")]
    SeriesTooShort { len: usize, required: usize },

    #[error("degenerate complexity: one series is constant (complexity estimate 0), correction factor undefined")]
    DegenerateComplexity,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("distance between {left:?} and {right:?} failed: {source}")]
    PairDistance {
        left: String,
        right: String,
        #[source]
        source: Box<Error>,
    },

    #[error("need at least {required} series, got {got}")]
    TooFewSeries { got: usize, required: usize },

    #[error("dataset has a single cluster; silhouette needs at least 2")]
    SingleCluster,

    #[error("label/id mismatch: ids without labels {missing:?}, labels without ids {unknown:?}")]
    LabelMismatch {
        missing: Vec<String>,
        unknown: Vec<String>,
    },

    #[error("duplicate id {0:?}")]
    DuplicateId(String),

    #[error("matrix not symmetric at ({row},{col})")]
    Asymmetric { row: usize, col: usize },

    #[error("matrix diagonal entry {index} is not zero")]
    NonzeroDiagonal { index: usize },

    #[error("matrix entry ({row},{col}) is {reason}")]
    BadMatrixEntry {
        row: usize,
        col: usize,
        reason: &'static str,
    },

    #[error("{path}{}: {message}", line.map(|l| format!(":{l}")).unwrap_or_default())]
    Parse {
        path: String,
        line: Option<u64>,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(path: impl Into<String>, line: impl Into<Option<u64>>, message: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            line: line.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
