use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("resource guard: {what} = {value} exceeds the configured maximum {max}")]
    ResourceGuard {
        what: &'static str,
        value: usize,
        max: usize,
    },

    /// A class function whose decomposition has a non-integral or negative
    /// multiplicity.
    #[error("not a genuine character: multiplicity of {partition} is {multiplicity}")]
    NotGenuine {
        partition: Partition,
        multiplicity: String,
    },

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
