//! Exact normal forms for the free commutative skew brace.
//!
//! Elements of the free commutative wire are mapped, through Fox
//! derivatives, to polynomials in `t[x]` over the integral group ring of the
//! free commutative group ([`canonical_wire::BracePoly`]). Equality of these
//! polynomials is equality in the wire, and fractions of them
//! ([`brace_fractions::Fraction`]) give the free commutative skew brace.

pub mod brace_fractions;
pub mod canonical_wire;
pub mod cli;
pub mod error;
pub mod expr;
pub mod group_algebra;
pub mod notation;
pub mod poly;
pub mod radical_model;
pub mod ring_wires;
pub mod sampling;
pub mod suites;
pub mod word_model;

pub use brace_fractions::{CommutativeWire, Fraction};
pub use canonical_wire::{BracePoly, GrPoly};
pub use error::{Error, ParseError, Result};
pub use group_algebra::{gen, GeneratorId, GroupElt, GroupRingElt};
pub use poly::{IntPoly, SparsePoly, TMono};
pub use radical_model::RadicalPoly;
pub use word_model::{AnyWord, CMono, Monomial, NCMono, Sign, Word};
