use thiserror::Error;

/// Errors raised by braid construction and the operations built on it.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("malformed braid word {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("braid groups need at least one strand")]
    NoStrands,

    #[error("letter 0 does not name a generator")]
    ZeroLetter,

    #[error("letter {letter} out of range for B_{strands} (|k| must be below {strands})")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("strand count mismatch: B_{left} vs B_{right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("expected a braid on {expected} strands, got {actual}")]
    WrongStrandCount { expected: usize, actual: usize },

    #[error("strand {strand} is not a strand of B_{strands}")]
    StrandOutOfRange { strand: usize, strands: usize },

    #[error("cannot delete every strand of B_{strands}")]
    DeleteAll { strands: usize },

    #[error("cannot place B_{strands} at offset {offset} inside B_{total}")]
    EmbedRange {
        strands: usize,
        total: usize,
        offset: usize,
    },

    #[error("{widths} cable widths given for a braid on {strands} strands")]
    WidthMismatch { widths: usize, strands: usize },

    #[error("cable widths must be positive")]
    ZeroWidth,

    #[error("exponent {0} must be odd")]
    EvenExponent(i64),

    #[error("braid is not in the interchanging family")]
    NotInFamily,

    #[error("search length {requested} exceeds the cap of {cap}")]
    SearchCap { requested: usize, cap: usize },

    #[error("invalid search configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for BraidError {
    fn from(err: std::io::Error) -> Self {
        BraidError::Io(err.to_string())
    }
}

pub type Result<T, E = BraidError> = std::result::Result<T, E>;
