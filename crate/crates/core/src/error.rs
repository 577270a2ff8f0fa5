use std::fmt;

/// Errors produced while building partitions or computing indices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Two inputs that must share a size do not.
    #[error("dimension mismatch: {what} ({left} vs {right})")]
    DimensionMismatch {
        what: &'static str,
        left: usize,
        right: usize,
    },
    /// A label lies outside `1..=cluster_count`.
    #[error("label {label} at position {position} is outside 1..={cluster_count}")]
    InvalidLabel {
        position: usize,
        label: usize,
        cluster_count: usize,
    },
    #[error("partition must contain at least one element")]
    EmptyPartition,
    #[error("cluster count must be at least 1")]
    ZeroClusters,
    /// A cluster or block id outside its valid range.
    #[error("{what} {value} is outside 1..={max}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },
    /// The index has no meaningful value for this input (e.g. fewer than two elements).
    #[error("index undefined: {0}")]
    UndefinedIndex(&'static str),
    /// Exhaustive permutation search was asked for more clusters than allowed.
    #[error(
        "exhaustive search over {clusters} clusters exceeds the cap of {cap}; use the assignment solver instead"
    )]
    Capacity { clusters: usize, cap: usize },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Malformed co-partition text. `line` and `token` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub token: Option<usize>,
    pub message: String,
}

impl ParseError {
    pub(crate) fn at_line(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            token: None,
            message: message.into(),
        }
    }

    pub(crate) fn at_token(line: usize, token: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            token: Some(token),
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.token {
            Some(token) => write!(
                f,
                "parse error at line {}, token {}: {}",
                self.line, token, self.message
            ),
            None => write!(f, "parse error at line {}: {}", self.line, self.message),
        }
    }
}

impl std::error::Error for ParseError {}

impl Error {
    /// True for errors caused by the caller's input rather than by the computation.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::UndefinedIndex(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
