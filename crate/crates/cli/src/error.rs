use std::io;
use std::path::PathBuf;

use lcsk_core::{OracleError, SeqError};
use thiserror::Error;

use crate::fasta::FastaError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Params(#[from] SeqError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{source_name}: {error}")]
    Fasta {
        source_name: String,
        #[source]
        error: FastaError,
    },
    #[error("writing output: {0}")]
    Output(#[source] io::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for bad invocations, 2 for input/output failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Params(_) | CliError::Oracle(_) => 1,
            CliError::Io { .. } | CliError::Fasta { .. } | CliError::Output(_) => 2,
        }
    }
}
