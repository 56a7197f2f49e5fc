use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Parameters outside a formula's hypotheses (wrong k, degree out of
    /// range, malformed triple, ...).
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// A brute-force matrix would exceed the configured size bound.
    /// Deliberately a hard error: results are never silently truncated.
    #[error("resource guard: {rows}x{cols} matrix has {} entries, limit is {limit}", rows * cols)]
    ResourceGuard { rows: usize, cols: usize, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
