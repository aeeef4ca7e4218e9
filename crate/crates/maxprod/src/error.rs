use std::path::PathBuf;

/// Errors of the IO layer, the pipelines and the command line.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    MalformedRow { line: u64, message: String },

    #[error("malformed input: {0}")]
    MalformedInput(String),

    #[error("pgm: {0}")]
    Pgm(#[from] crate::pgm::PgmError),

    #[cfg(feature = "png")]
    #[error("png: {0}")]
    Png(String),

    #[error("{0}")]
    Math(#[from] maxprod_core::Error),

    #[error("usage: {0}")]
    Usage(String),

    #[error("manifest: {0}")]
    Manifest(#[from] serde_json::Error),

    #[error("thread pool: {0}")]
    ThreadPool(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code: 2 for usage errors, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
