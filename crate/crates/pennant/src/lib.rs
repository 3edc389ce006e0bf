//! Pennant diagrams for descriptor vocabularies: corpus and index files,
//! the `pennant` command line tool and a read-only HTTP service.
//!
//! All computation lives in [`pennant_core`]; this crate adds IO.

pub mod cli;
pub mod corpus_file;
pub mod diagram_json;
pub mod service;
pub mod store;

use std::path::PathBuf;

pub use pennant_core as core;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: {source}")]
    Ingest {
        line: usize,
        #[source]
        source: pennant_core::Error,
    },

    #[error(transparent)]
    Core(#[from] pennant_core::Error),

    #[error("invalid diagram JSON: {0}")]
    DiagramJson(String),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
