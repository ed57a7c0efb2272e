use thiserror::Error;

/// Errors raised by the algebra and braid layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("operands live over different alphabets")]
    AlphabetMismatch,
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("index {index} out of range for {n} strands")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("braid has {found} strands, expected {expected}")]
    StrandMismatch { expected: usize, found: usize },
    #[error("at least 2 strands are required, got {0}")]
    TooFewStrands(usize),
    #[error("braid is not pure: its permutation is {0}")]
    NotPure(String),
    #[error("braid is not in the Rabenda subgroup: its virtual permutation is {0}")]
    NotRabenda(String),
    #[error("Fox derivatives are only defined over free alphabets")]
    NotFree,
    #[error("no abelianization assignment for symbol `{0}`")]
    MissingAssignment(String),
    #[error("unknown representation `{0}`")]
    UnknownRepresentation(String),
    #[error("unknown braid mode `{0}`")]
    UnknownMode(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(token: impl Into<String>, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.into(),
        reason: reason.into(),
    }
}
