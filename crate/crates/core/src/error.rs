use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("index {index} out of range for degree {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("degree {n} is too small for this operation (needs at least {min})")]
    DegreeTooSmall { n: usize, min: usize },

    #[error("invariant violated after applying involution: {0}")]
    InvariantViolation(String),

    #[error("involution {label} is not defined here: {reason}")]
    NotDefined { label: String, reason: String },

    #[error("graph construction failed for label {label} at {witness}: {reason}")]
    Construction {
        label: u32,
        witness: String,
        reason: String,
    },

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("unknown edge label {0}")]
    UnknownLabel(u32),

    #[error("not in span of the {basis} basis: {reason}")]
    NotInSpan { basis: &'static str, reason: String },

    #[error("class is not a queer dual equivalence class: {0}")]
    NotQueerClass(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),
}
