use thiserror::Error;

/// Errors raised by the finite lattice engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set of size {n} exceeds the cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("requested cap {cap} exceeds the compiled hard limit {hard}")]
    HardLimit { cap: usize, hard: usize },

    #[error("ground-set mismatch: {left} vs {right}")]
    GroundMismatch { left: usize, right: usize },

    #[error("element {0} appears more than once")]
    DuplicateElement(usize),

    #[error("element {element} is out of range for a ground set of size {n}")]
    OutOfRange { element: usize, n: usize },

    #[error("element {0} is not covered by any block")]
    MissingElement(usize),

    #[error("empty block")]
    EmptyBlock,

    #[error("malformed partition literal: {0}")]
    Malformed(String),

    #[error("element set must be non-empty")]
    EmptySet,

    #[error("input is not a chain: positions {0} and {1} are not strictly increasing")]
    NotAChain(usize, usize),

    #[error("input is not an antichain: members {0} and {1} are comparable")]
    NotAnAntichain(usize, usize),

    #[error("subset chain must be strictly increasing with sets of size at least 2 (position {0})")]
    BadSubsetChain(usize),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("inconsistent continuum model: {0}")]
    Model(String),

    #[error("value not determined by the model: {0}")]
    Indeterminate(String),

    #[error("arithmetic overflow computing {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { n, cap })
    } else {
        Ok(())
    }
}
