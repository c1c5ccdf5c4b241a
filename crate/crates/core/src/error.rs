use alloc::string::String;

/// Errors raised by constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("domain size must be positive")]
    EmptyDomain,
    #[error("state {state} is out of range for a domain of size {size}")]
    StateOutOfRange { state: usize, size: usize },
    #[error("state {0} appears twice in a cycle support")]
    DuplicateSupport(usize),
    #[error("domain sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("letter {letter} is out of range for an alphabet of {size} letters")]
    LetterOutOfRange { letter: usize, size: usize },
    #[error("alphabet sizes differ: {left} vs {right}")]
    AlphabetMismatch { left: usize, right: usize },
    #[error("tableau dimensions differ: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("{what} limit exceeded: {required} > {limit}")]
    LimitExceeded {
        what: &'static str,
        required: u128,
        limit: u128,
    },
    #[error("invalid automaton: {0}")]
    InvalidDfa(String),
    #[error("invalid monster: {0}")]
    InvalidMonster(String),
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
}

impl Error {
    /// True for resource-cap failures, which callers report as skipped rather than failed.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::LimitExceeded { .. })
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
