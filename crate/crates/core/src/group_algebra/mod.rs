//! The free commutative group on an open-ended set of generators and its
//! integral group ring.

mod group;
mod ring;

use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use group::GroupElt;
pub(crate) use ring::write_unsigned_term;
pub use ring::GroupRingElt;

/// Name of a free generator. Ordered byte-lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId(Arc<str>);

impl GeneratorId {
    pub fn new(name: &str) -> Result<Self> {
        if is_identifier(name) {
            Ok(GeneratorId(Arc::from(name)))
        } else {
            Err(Error::InvalidGenerator(name.to_string()))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// `[a-zA-Z][a-zA-Z0-9_]*`
pub fn is_identifier(name: &str) -> bool {
    let mut bytes = name.bytes();
    match bytes.next() {
        Some(b) if b.is_ascii_alphabetic() => {}
        _ => return false,
    }
    bytes.all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for GeneratorId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0)
    }
}

/// Shorthand used throughout tests and examples. Panics on an invalid name.
pub fn gen(name: &str) -> GeneratorId {
    GeneratorId::new(name).unwrap_or_else(|e| panic!("{e}"))
}
