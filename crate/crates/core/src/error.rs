use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("segment [{beg}..{end}] is outside a word of length {len}")]
    Range { beg: usize, end: usize, len: usize },
    #[error("input must be non-empty")]
    Empty,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
