//! Sparse commutative polynomials in the variables `t[x]`, generic over the
//! coefficient ring. Shared by the canonical wire (group-ring coefficients)
//! and the radical model (integer coefficients).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::group_algebra::{GeneratorId, GroupElt, GroupRingElt};

/// Commutative ring of polynomial coefficients.
pub trait Coefficient: Clone + PartialEq + Zero + One + fmt::Debug + fmt::Display {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;

    /// `self += other`, in place.
    fn accumulate(&mut self, other: &Self) {
        *self = self.plus(other);
    }

    /// `self += a·b`, in place.
    fn add_product(&mut self, a: &Self, b: &Self) {
        self.accumulate(&a.times(b));
    }

    /// Sign and unsigned text when the coefficient is a single signed atom.
    /// The text is empty for a unit (`±1`). `None` for multi-term values.
    fn signed_atom(&self) -> Option<(bool, String)>;

    fn to_json(&self) -> Value;
}

impl Coefficient for BigInt {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, other: &Self) {
        *self += other;
    }
    fn signed_atom(&self) -> Option<(bool, String)> {
        let abs = self.abs();
        let text = if abs.is_one() { String::new() } else { abs.to_string() };
        Some((self.is_negative(), text))
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

impl Coefficient for GroupRingElt {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn accumulate(&mut self, other: &Self) {
        for (g, c) in other.terms() {
            self.add_term(c.clone(), g.clone());
        }
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        for (ga, ca) in a.terms() {
            for (gb, cb) in b.terms() {
                self.add_term(ca * cb, ga * gb);
            }
        }
    }
    fn signed_atom(&self) -> Option<(bool, String)> {
        if self.len() != 1 {
            return None;
        }
        let (g, c) = self.terms().next()?;
        let mut text = String::new();
        if !(g.is_identity() && c.abs().is_one()) {
            crate::group_algebra::write_unsigned_term(&mut text, c, g).ok()?;
        }
        Some((c.is_negative(), text))
    }
    fn to_json(&self) -> Value {
        serde_json::to_value(self).unwrap_or(Value::Null)
    }
}

/// Monomial `t[x]^a t[y]^b ...`; the empty monomial is the constant slot.
///
/// Ordered graded-lexicographically: total degree first, then the sorted
/// sequence of variable names (with multiplicity) compared byte-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TMono {
    degs: Vec<(GeneratorId, u32)>,
}

impl TMono {
    pub fn one() -> Self {
        TMono::default()
    }

    pub fn var(x: GeneratorId) -> Self {
        TMono { degs: vec![(x, 1)] }
    }

    pub fn from_degrees<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (GeneratorId, u32)>,
    {
        let mut degs: Vec<(GeneratorId, u32)> = pairs.into_iter().filter(|(_, d)| *d > 0).collect();
        degs.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(GeneratorId, u32)> = Vec::with_capacity(degs.len());
        for (g, d) in degs {
            match merged.last_mut() {
                Some((last, acc)) if *last == g => *acc += d,
                _ => merged.push((g, d)),
            }
        }
        TMono { degs: merged }
    }

    pub fn is_one(&self) -> bool {
        self.degs.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degs.iter().map(|(_, d)| d).sum()
    }

    pub fn degree_in(&self, x: &GeneratorId) -> u32 {
        self.degs
            .binary_search_by(|(g, _)| g.cmp(x))
            .map(|i| self.degs[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorId, u32)> {
        self.degs.iter().map(|(g, d)| (g, *d))
    }

    pub fn mul(&self, other: &TMono) -> TMono {
        TMono::from_degrees(self.degs.iter().chain(other.degs.iter()).cloned())
    }

    /// The group element `x^a y^b ...` obtained by substituting `t[x] ↦ [x]`.
    pub fn to_group_elt(&self) -> GroupElt {
        GroupElt::from_exponents(self.degs.iter().map(|(g, d)| (g.clone(), i64::from(*d))))
    }

    fn letters(&self) -> impl Iterator<Item = &GeneratorId> {
        self.degs.iter().flat_map(|(g, d)| std::iter::repeat_n(g, *d as usize))
    }
}

impl Ord for TMono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

impl PartialOrd for TMono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degs.is_empty() {
            return f.write_str("1");
        }
        for (g, d) in &self.degs {
            if *d == 1 {
                write!(f, "t[{g}]")?;
            } else {
                write!(f, "t[{g}]^{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Polynomial with no stored zero coefficients, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly<C> {
    coeffs: BTreeMap<TMono, C>,
}

pub type IntPoly = SparsePoly<BigInt>;

impl<C> Default for SparsePoly<C> {
    fn default() -> Self {
        SparsePoly {
            coeffs: BTreeMap::new(),
        }
    }
}

impl<C: Coefficient> SparsePoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(TMono::one(), c)
    }

    pub fn var(x: GeneratorId) -> Self {
        Self::monomial(TMono::var(x), C::one())
    }

    pub fn monomial(m: TMono, c: C) -> Self {
        let mut out = Self::default();
        out.add_term(m, c);
        out
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (TMono, C)>,
    {
        let mut out = Self::default();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub(crate) fn add_term(&mut self, m: TMono, c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().accumulate(&c);
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&TMono, &C)> + ExactSizeIterator {
        self.coeffs.iter()
    }

    pub fn coeff(&self, m: &TMono) -> C {
        self.coeffs.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Value at `t = 0`.
    pub fn constant_term(&self) -> C {
        self.coeff(&TMono::one())
    }

    /// Value at `t = 1`.
    pub fn coeff_sum(&self) -> C {
        self.coeffs.values().fold(C::zero(), |acc, c| acc.plus(c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.coeffs {
            out.add_term(m.clone(), c.negate());
        }
        out
    }

    pub fn neg(&self) -> Self {
        SparsePoly {
            coeffs: self.coeffs.iter().map(|(m, c)| (m.clone(), c.negate())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::default();
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                match out.coeffs.entry(ma.mul(mb)) {
                    std::collections::btree_map::Entry::Vacant(v) => {
                        let c = ca.times(cb);
                        if !c.is_zero() {
                            v.insert(c);
                        }
                    }
                    std::collections::btree_map::Entry::Occupied(mut o) => {
                        o.get_mut().add_product(ca, cb);
                        if o.get().is_zero() {
                            o.remove();
                        }
                    }
                }
            }
        }
        out
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: &C) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(m, c)| (m.clone(), k.times(c))))
    }

    pub fn map_coeffs<D: Coefficient>(&self, mut f: impl FnMut(&C) -> D) -> SparsePoly<D> {
        SparsePoly::from_terms(self.coeffs.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let mono: serde_json::Map<String, Value> =
                    m.iter().map(|(g, d)| (g.as_str().to_string(), json!(d))).collect();
                json!({ "mono": mono, "coeff": c.to_json() })
            })
            .collect();
        json!({ "terms": terms })
    }
}

/// Terms ascend in graded-lex order with the constant first, e.g.
/// `2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]`. Multi-term coefficients are
/// parenthesised: `(1 - x)*t[y]`.
impl<C: Coefficient> fmt::Display for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.coeffs.iter().enumerate() {
            let first = k == 0;
            match c.signed_atom() {
                Some((negative, text)) => {
                    match (first, negative) {
                        (true, true) => f.write_str("-")?,
                        (true, false) => {}
                        (false, true) => f.write_str(" - ")?,
                        (false, false) => f.write_str(" + ")?,
                    }
                    match (text.is_empty(), m.is_one()) {
                        (true, true) => f.write_str("1")?,
                        (true, false) => write!(f, "{m}")?,
                        (false, true) => f.write_str(&text)?,
                        (false, false) => write!(f, "{text}*{m}")?,
                    }
                }
                None if m.is_one() => write!(f, "{c}")?,
                None => {
                    if !first {
                        f.write_str(" + ")?;
                    }
                    write!(f, "({c})*{m}")?;
                }
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for SparsePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;

    fn mono(pairs: &[(&str, u32)]) -> TMono {
        TMono::from_degrees(pairs.iter().map(|(g, d)| (gen(g), *d)))
    }

    #[test]
    fn graded_lex_order() {
        assert!(TMono::one() < mono(&[("z", 1)]));
        assert!(mono(&[("x", 1)]) < mono(&[("y", 1)]));
        assert!(mono(&[("y", 1)]) < mono(&[("x", 1), ("y", 1)]));
        assert!(mono(&[("x", 2)]) < mono(&[("x", 1), ("y", 1)]));
        assert!(mono(&[("x", 1), ("y", 1)]) < mono(&[("y", 2)]));
    }

    #[test]
    fn monomial_product_and_rendering() {
        let m = mono(&[("x", 1)]).mul(&mono(&[("y", 2), ("x", 1)]));
        assert_eq!(m.to_string(), "t[x]^2t[y]^2");
        assert_eq!(m.to_group_elt().exponent(&gen("y")), 2);
    }

    #[test]
    fn integer_polynomial_rendering() {
        let p = IntPoly::from_terms([
            (TMono::one(), BigInt::from(-1)),
            (mono(&[("x", 1)]), BigInt::from(1)),
            (mono(&[("x", 1), ("y", 1)]), BigInt::from(-3)),
        ]);
        assert_eq!(p.to_string(), "-1 + t[x] - 3*t[x]t[y]");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn coefficient_sum_and_constant() {
        let x = IntPoly::var(gen("x"));
        let y = IntPoly::var(gen("y"));
        let p = x.mul(&y).sub(&IntPoly::constant(BigInt::from(2)));
        assert_eq!(p.coeff_sum(), BigInt::from(-1));
        assert_eq!(p.constant_term(), BigInt::from(-2));
        assert!(p.sub(&p).is_zero());
    }
}
