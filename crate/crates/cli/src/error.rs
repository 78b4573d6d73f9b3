use std::path::PathBuf;

use symcenter::error::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Syntax(String),
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: Error },
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    /// Anchors a build error to the line containing byte `offset` of `source`.
    pub fn at(source: &str, offset: usize, error: Error) -> CliError {
        let line = source[..offset.min(source.len())].matches('\n').count() + 1;
        CliError::Invalid { line, source: error }
    }

    /// 1 for a failed mathematical check, 2 for bad input or usage.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(Error::CriterionDisagreement { .. } | Error::Internal(_)) => 1,
            _ => 2,
        }
    }
}
