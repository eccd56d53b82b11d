use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signed permutation: {0}")]
    InvalidPerm(String),
    #[error("invalid signed composition: {0}")]
    InvalidComp(String),
    #[error("invalid bipartition: {0}")]
    InvalidBip(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{what} supports n <= {max}, got {n}")]
    Envelope {
        what: &'static str,
        n: usize,
        max: usize,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_size(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::SizeMismatch(a, b))
    }
}

pub(crate) fn check_envelope(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n <= max {
        Ok(())
    } else {
        Err(Error::Envelope { what, n, max })
    }
}
