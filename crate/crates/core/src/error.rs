use std::fmt;

use thiserror::Error;

/// Errors from scalar and free-algebra arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime modulus")]
    InvalidModulus(u64),
    #[error("unknown field `{0}` (expected Q or F<p>)")]
    UnknownField(String),
    #[error("operands live over different alphabets or fields")]
    RingMismatch,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("map has {found} images but the source alphabet has {expected} generators")]
    ImageCount { expected: usize, found: usize },
    #[error("no table entry for generator `{0}`")]
    MissingEntry(String),
}

/// A syntax error with a 1-based source position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into(), expected: Vec::new() }
    }

    pub fn expecting(mut self, expected: &[&str]) -> Self {
        self.expected = expected.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Shifts a position reported relative to a fragment onto its enclosing file.
    pub(crate) fn at_line(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)?;
        if !self.expected.is_empty() {
            write!(f, " (expected one of: {})", self.expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// Crate-level error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),
    #[error("zero relation supplied")]
    ZeroRelation,
    #[error("degree bound {bound} is too small: degree {required} is required")]
    DegreeOverflow { bound: usize, required: usize },
    #[error("presentation has no antipode table")]
    MissingAntipode,
    #[error("incomplete table: {0}")]
    IncompleteTable(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("map mismatch: {0}")]
    MapMismatch(String),
    #[error("not a Hopf map: {0}")]
    NotHopfMap(String),
    #[error("factorization precondition fails at generator `{generator}`: {detail}")]
    DoesNotFactor { generator: String, detail: String },
    #[error("table dimension mismatch: {0}")]
    Dimension(String),
    #[error("dimension {dim} exceeds the exhaustive search limit {limit}")]
    TooLarge { dim: usize, limit: usize },
    #[error("not finite-dimensional: basis does not stabilize at degree {0}")]
    NotFiniteDimensional(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
