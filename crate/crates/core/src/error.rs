use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A geometry triple (n, k, d) violates one of the standing constraints.
    /// The message names the violated constraint.
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    /// A variable name was not declared in the inequality system it is used with.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A string could not be parsed as an exact rational.
    #[error("malformed rational `{0}` (expected `p` or `p/q` with nonzero q)")]
    MalformedRational(String),

    /// An output format name was not recognized.
    #[error("unknown output format `{0}` (expected table, csv or json)")]
    UnknownFormat(String),

    /// A sweep bound was out of range. The message names the violated constraint.
    #[error("{0}")]
    InvalidSweepBound(String),
}

pub type Result<T> = std::result::Result<T, Error>;
