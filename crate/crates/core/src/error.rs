use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Input` covers malformed or mismatched values, `Resource` covers
/// documented ceilings and parameter regimes the tool refuses to enter,
/// `Internal` flags consistency checks that must never fail on a correct
/// build (e.g. a non-exact division in the hook formula).
#[derive(Debug, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource ceiling: {0}")]
    Resource(String),
    #[error("degenerate spectrum: {0}")]
    Degenerate(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }
    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }
}
