use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// A URL could not be decomposed into scheme and domain.
    #[error("malformed url: {0}")]
    MalformedUrl(String),

    /// Invalid configuration (bad hyperparameters, undersized template bank, ...).
    #[error("configuration error: {0}")]
    Config(String),

    /// A persisted file violated its schema.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Matrix/vector shapes disagree.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A numeric routine failed (no convergence, non-finite values, rank deficiency).
    #[error("numeric failure: {0}")]
    Numeric(String),

    /// A document id had no entry in the supplied label map.
    #[error("missing label for document {0}")]
    MissingLabel(String),

    /// Vector inference was asked to run on a document with no in-vocabulary tokens.
    #[error("no trainable tokens in document {0}")]
    NoTrainableTokens(String),

    /// An error from a named pipeline stage.
    #[error("stage {stage}: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Tag an error with the pipeline stage it came from.
    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
