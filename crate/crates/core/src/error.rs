use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed poset: {0}")]
    MalformedPoset(String),

    #[error("unknown element {0}")]
    UnknownElement(String),

    #[error("poset is not a lattice")]
    NotALattice,

    #[error("domain error: {0}")]
    Domain(String),

    #[error("label {k} is outside J_N = 1..={max} for n = {n}")]
    LabelOutOfRange { n: u32, k: u64, max: u64 },

    #[error("arc ({i}, {j}) is not oriented from the lower to the higher vertex")]
    Orientation { i: u32, j: u32 },

    #[error("invalid adjunct pair: {0}")]
    InvalidAdjunctPair(String),

    #[error("adjunct operands are not disjoint: {0}")]
    NotDisjoint(String),

    #[error("not a fundamental basic block: vertices {uncovered:?} are not covered by any rank")]
    NotAnFbb { uncovered: Vec<u32> },

    #[error("adjunct representation extraction unsupported: {0}")]
    ExtractionUnsupported(String),

    #[error("n = {n} exceeds the enumeration cap {cap}; use the recurrence counts instead")]
    EnumerationCap { n: u32, cap: u32 },

    #[error("unsupported format '{0}'")]
    UnsupportedFormat(String),

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
