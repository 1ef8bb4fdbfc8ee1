use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the order relation contains a cycle through element {0}")]
    Cycle(usize),

    #[error("element index {index} out of range for {n} elements")]
    Index { index: usize, n: usize },

    #[error("{what}: {value} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("set {0:#b} is not orthoclosed")]
    NotOrthoclosed(u64),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown element `{name}`")]
    UnknownElement { line: usize, name: String },

    #[error("line {line}: element `{name}` declared twice")]
    DuplicateElement { line: usize, name: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A structural invariant failed, or two independent evaluations of the
    /// same property disagreed. Signals a bug, never a property of the input.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
