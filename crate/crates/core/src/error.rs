use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet must be non-empty with distinct letters")]
    BadAlphabet,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("alphabets differ")]
    AlphabetMismatch,
    #[error("ideal sides differ")]
    SideMismatch,
    #[error("cap too small: cap {cap}, need at least {needed}")]
    CapTooSmall { cap: usize, needed: usize },
    #[error("not a suffix code: {0}")]
    NotSuffixCode(String),
    #[error("order only defined on a binary alphabet")]
    NonBinaryAlphabet,
    #[error("complement of a {side} ideal must be closed under {closure}; `{word}` breaks it")]
    BadComplement {
        side: &'static str,
        closure: &'static str,
        word: String,
    },
    #[error("depth {requested} exceeds bound {bound}")]
    DepthExceeded { requested: usize, bound: usize },
    #[error("empty period")]
    EmptyPeriod,
    #[error("illegal word `{0}`")]
    IllegalWord(String),
    #[error("machine: {0}")]
    Machine(String),
    #[error("no fixed point within {0} steps")]
    NotStabilized(usize),
    #[error("oracle insufficient for `{0}`")]
    OracleInsufficient(String),
    #[error("infinite index")]
    InfiniteIndex,
    #[error("words must all have length {expected}, got `{word}`")]
    LengthMismatch { expected: usize, word: String },
    #[error("fixture `{0}` has no generator schema")]
    NoSchema(String),
    #[error("{0}")]
    Invalid(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
