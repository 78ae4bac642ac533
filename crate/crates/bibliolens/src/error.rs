use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}: io error: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("schema error at {locator}: {message}")]
    Schema { locator: String, message: String },
    #[error("duplicate article id {0:?}")]
    DuplicateId(String),
    #[error("article {id:?}: year {year} outside {start}..={end}")]
    YearOutOfRange {
        id: String,
        year: i32,
        start: i32,
        end: i32,
    },
    #[error("negative count {count} for key {key:?} on line {line}")]
    NegativeCount { key: String, count: i64, line: u64 },
    #[error("article {id:?} lists author {name:?} more than once")]
    DuplicateAuthorInArticle { id: String, name: String },
    #[error("bin n={0} is missing or zero")]
    MissingBin(i64),
    #[error("corpus has no articles")]
    EmptyCorpus,
    #[error("article {0:?} has no authors")]
    NoAuthors(String),
    #[error("bucket edges must be strictly increasing")]
    BadEdges,
    #[error("need at least {needed} journals, got {got}")]
    TooFewJournals { needed: usize, got: usize },
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("window {start}..={end} extends before the corpus start year {corpus_start}")]
    InsufficientYears { start: i32, end: i32, corpus_start: i32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn schema(locator: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            locator: locator.into(),
            message: message.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by bad input data rather than by an analysis
    /// precondition. The CLI maps these to exit code 2.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Io { .. }
                | Error::Schema { .. }
                | Error::DuplicateId(_)
                | Error::YearOutOfRange { .. }
                | Error::NegativeCount { .. }
                | Error::DuplicateAuthorInArticle { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
