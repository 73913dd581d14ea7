//! Corpus registry, run orchestration and reports for the weight-count checks.

pub mod corpus;
pub mod report;
pub mod run;

use bgawc_core::group::GroupError;
use bgawc_core::harness::HarnessError;
use thiserror::Error;

pub use corpus::{default_corpus, entry_for, parse_builtin, parse_group, CorpusEntry, Source};
pub use report::Report;
pub use run::{run_corpus, FamilySelection, RunConfig};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown group specification `{0}`")]
    UnknownGroup(String),
    #[error("{p} is not a prime (group order {order})")]
    BadPrime { p: u32, order: usize },
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Harness(#[from] HarnessError),
}

impl From<bgawc_core::modrep::ModRepError> for CliError {
    fn from(e: bgawc_core::modrep::ModRepError) -> Self {
        CliError::Harness(e.into())
    }
}

impl From<bgawc_core::blocks::BlockError> for CliError {
    fn from(e: bgawc_core::blocks::BlockError) -> Self {
        CliError::Harness(e.into())
    }
}
