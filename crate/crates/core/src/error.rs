use std::io;
use std::path::PathBuf;

use thiserror::Error;

/// Everything that can go wrong while ingesting or analyzing a corpus.
#[derive(Debug, Error)]
pub enum Error {
    #[error("CSV document has no header row")]
    MissingHeader,

    #[error("column map refers to unknown header {header:?} (for field {field})")]
    UnknownColumn { field: String, header: String },

    #[error("invalid column mapping {0:?}: expected logical=header")]
    BadColumnSpec(String),

    #[error("unknown logical field {0:?}")]
    UnknownField(String),

    #[error("unknown analysis {0:?} (expected stats, trends, corr, tokens, cooc, mood or all)")]
    UnknownAnalysis(String),

    #[error("row {row} rejected: {reason}")]
    RowRejected { row: usize, reason: String },

    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("no valid values for feature {0}")]
    NoValidValues(String),

    #[error("insufficient data: {n} complete pairs, need at least 2")]
    InsufficientData { n: usize },

    #[error("undefined correlation: series is constant")]
    UndefinedCorrelation,

    #[error("sequence lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("word list is empty")]
    EmptyWordList,

    #[error("duplicate word {0:?} in word list")]
    DuplicateWord(String),

    #[error("{0:?} is not a valid token (lowercase ASCII letters only)")]
    InvalidWord(String),

    #[error("figure error: {0}")]
    Figure(String),

    #[error("{analysis} analysis failed: {source}")]
    Analysis {
        analysis: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("output directory {0} already exists (use --force to overwrite)")]
    OutputExists(PathBuf),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for failures of the filesystem rather than of the data.
    pub fn is_io(&self) -> bool {
        match self {
            Error::Io { .. } | Error::OutputExists(_) => true,
            Error::Csv(e) => e.is_io_error(),
            Error::Analysis { source, .. } => source.is_io(),
            _ => false,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
