use std::fmt;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A located problem in `.slt` or model input. Lines and columns are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} at line {}, column {}",
            self.message, self.line, self.column
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("constant table must declare at least one constant")]
    EmptyTable,
    #[error("empty constant name at position {0}")]
    EmptyConstantName(usize),
    #[error("duplicate constant name '{0}'")]
    DuplicateConstant(String),
    #[error("unknown constant '{0}'")]
    UnknownConstant(String),
    #[error("constant index {index} out of range for {universe} constants")]
    IndexOutOfRange { index: usize, universe: usize },
    #[error("{0} must mention at least one constant")]
    EmptySet(&'static str),
    #[error("atom join needs at least one atom")]
    EmptyJoin,
    #[error("operands are bound to different constant tables")]
    TableMismatch,
    #[error("axiom violation: no atom lies below constant(s) {}", .0.join(", "))]
    Uncovered(Vec<String>),
    #[error(
        "{what} enumerates 2^{size} sets but the guard allows |C| <= {limit}; \
         raise the guard or use a sampled check"
    )]
    Guard {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("{what} would need about {bytes} bytes, above the {limit} byte budget")]
    MemoryGuard {
        what: &'static str,
        bytes: u128,
        limit: u128,
    },
    #[error("atom {0} is not compatible with the model")]
    NotCompatible(String),
    #[error("model is trivial (every duple is positive); no subdirect decomposition")]
    TrivialModel,
    #[error(transparent)]
    Parse(#[from] ParseError),
}
