use thiserror::Error;

/// Errors shared by the catalog, bridge and verification layers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown mean identifier `{0}`")]
    UnknownMean(String),
    #[error("unknown Seiffert function identifier `{0}`")]
    UnknownSeiffert(String),
    #[error("unknown chain preset `{0}`")]
    UnknownChain(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid grid: {0}")]
    Grid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
