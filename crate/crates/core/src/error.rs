use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A computed value contradicts something that must hold (wrong model,
    /// wrong counts, engine bug). Pipelines stop here.
    #[error("inconsistency: {0}")]
    Inconsistent(String),
    #[error("bad reduction: {0}")]
    BadReduction(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
