use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("the zero element has no initial term")]
    ZeroElement,
    #[error("not a member of the canonical wire: {0}")]
    NotAMember(String),
    #[error("operation requires words over the commutative alphabet")]
    WrongAlphabet,
    #[error("element is not invertible for the star operation: {0}")]
    NotInvertible(String),
    #[error("unknown built-in example `{0}`")]
    UnknownExample(String),
    #[error("unknown suite `{0}` (expected one of: wire, fractions, fox, radical, ringwire)")]
    UnknownSuite(String),
    #[error("no circle inverses in a wire; use fractions")]
    CircleInverseInWire,
    #[error("invalid ring parameters: {0}")]
    InvalidRing(String),
    #[error("output failed: {0}")]
    Output(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error at a byte offset of the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<String>,
    pub found: String,
}

impl ParseError {
    pub fn new(offset: usize, expected: &[&str], found: impl Into<String>) -> Self {
        ParseError {
            offset,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: found.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: expected ", self.offset)?;
        match self.expected.as_slice() {
            [] => write!(f, "nothing")?,
            [one] => write!(f, "{one}")?,
            many => write!(f, "one of {}", many.join(", "))?,
        }
        if self.found.is_empty() {
            write!(f, ", found end of input")
        } else {
            write!(f, ", found `{}`", self.found)
        }
    }
}

impl std::error::Error for ParseError {}
