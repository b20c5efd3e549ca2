use thiserror::Error;

/// Errors raised by the algebra kernel and the session layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in different rings")]
    RingMismatch,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error("division by zero")]
    DivisionByZero,

    #[error("resource budget exceeded: {0}")]
    Resource(String),

    #[error("ideal is not m-primary within budget (searched up to degree {cap})")]
    NotMPrimary { cap: u32 },

    #[error("possibly infinite length: no certifying truncation degree up to {cap}{}", context.as_ref().map(|c| format!(" ({c})")).unwrap_or_default())]
    PossiblyInfiniteLength { cap: u32, context: Option<String> },

    #[error("containment fails: {0}")]
    NotContained(String),

    #[error("fit not stabilized: {0}")]
    NotStabilized(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{0}")]
    Parse(ParseError),
}

/// A located parse error; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub source_line: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "line {}, column {}: {}", self.line, self.column, self.message)?;
        writeln!(f, "  {}", self.source_line)?;
        write!(f, "  {}^", " ".repeat(self.column.saturating_sub(1)))
    }
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
