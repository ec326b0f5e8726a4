use std::fmt;

use crate::clopen::Word;

/// Errors shared by all engines in this crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("period must be nonempty")]
    EmptyPeriod,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("degree {degree} exceeds the exhaustive-search cap {cap}")]
    DegreeCap { degree: usize, cap: usize },

    #[error("{side} prefixes do not form a complete prefix code")]
    IncompleteCode { side: CodeSide },

    #[error("depth {depth} outside supported range {min}..={max}")]
    DepthRange { depth: usize, min: usize, max: usize },

    #[error("cylinder {prefix} is longer than the requested depth {depth}")]
    DepthTooShallow { prefix: Word, depth: usize },

    #[error("cylinder search for {context} exhausted at depth cap {cap}")]
    SearchExhausted { context: &'static str, cap: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("table budget {budget} exceeded ({cells} cells)")]
    TableBudget { budget: usize, cells: usize },
}

/// Which side of a prefix-exchange table failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeSide {
    Source,
    Target,
}

impl fmt::Display for CodeSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodeSide::Source => write!(f, "source"),
            CodeSide::Target => write!(f, "target"),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
