//! File formats, reports, corpus runs and the command line for `psc-core`.

pub mod cli;
pub mod corpus;
pub mod format;
pub mod report;

use std::path::{Path, PathBuf};

pub use cli::run;
pub use corpus::{run_corpus, CorpusOptions, DEFAULT_CORPUS};
pub use format::{GroupEntry, GroupFile, ParseError, Tag};
pub use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] psc_core::Error),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.to_path_buf(), source }
    }
}
