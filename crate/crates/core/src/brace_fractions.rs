//! The skew brace of fractions of a cancellative commutative wire.
//!
//! A fraction `u/v` is an unreduced pair; `u/v = u₁/v₁` iff `u∘v₁ = v∘u₁`.
//! Over the canonical wire this is the free commutative skew brace.

use std::fmt;

use serde_json::{json, Value};

use crate::canonical_wire::BracePoly;

/// Carrier of a commutative wire: `(W, ⋆)` a group, `(W, ∘)` a commutative
/// monoid. The wire axioms are checked by the property suites, not assumed.
pub trait CommutativeWire: Clone + fmt::Debug {
    fn identity() -> Self;
    fn star(&self, other: &Self) -> Self;
    fn star_inv(&self) -> Self;
    fn circ(&self, other: &Self) -> Self;
    fn wire_eq(&self, other: &Self) -> bool;
}

impl CommutativeWire for BracePoly {
    fn identity() -> Self {
        BracePoly::identity()
    }
    fn star(&self, other: &Self) -> Self {
        BracePoly::star(self, other)
    }
    fn star_inv(&self) -> Self {
        BracePoly::star_inv(self)
    }
    fn circ(&self, other: &Self) -> Self {
        BracePoly::circ(self, other)
    }
    fn wire_eq(&self, other: &Self) -> bool {
        self == other
    }
}

#[derive(Clone, Debug)]
pub struct Fraction<W> {
    pub num: W,
    pub den: W,
}

impl<W: CommutativeWire> Fraction<W> {
    pub fn new(num: W, den: W) -> Self {
        Fraction { num, den }
    }

    /// The canonical map `w ↦ w/e`.
    pub fn from_wire(w: W) -> Self {
        Fraction {
            num: w,
            den: W::identity(),
        }
    }

    pub fn neutral() -> Self {
        Fraction {
            num: W::identity(),
            den: W::identity(),
        }
    }

    /// Cross-multiplication; sound because the carrier is `∘`-cancellative.
    pub fn equiv(&self, other: &Self) -> bool {
        self.num.circ(&other.den).wire_eq(&self.den.circ(&other.num))
    }

    /// `u/v ⋆ u₁/v₁ = (u∘v₁ ⋆ (v∘v₁)⁻¹ ⋆ v∘u₁) / (v∘v₁)`
    pub fn star(&self, other: &Self) -> Self {
        let den = self.den.circ(&other.den);
        let num = self
            .num
            .circ(&other.den)
            .star(&den.star_inv().star(&self.den.circ(&other.num)));
        Fraction { num, den }
    }

    /// `(v ⋆ u⁻¹ ⋆ v) / v`
    pub fn star_inv(&self) -> Self {
        let num = self.den.star(&self.num.star_inv().star(&self.den));
        Fraction {
            num,
            den: self.den.clone(),
        }
    }

    pub fn circ(&self, other: &Self) -> Self {
        Fraction {
            num: self.num.circ(&other.num),
            den: self.den.circ(&other.den),
        }
    }

    pub fn circ_inv(&self) -> Self {
        Fraction {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
}

impl<W: CommutativeWire> PartialEq for Fraction<W> {
    fn eq(&self, other: &Self) -> bool {
        self.equiv(other)
    }
}

impl<W: fmt::Display> fmt::Display for Fraction<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

impl Fraction<BracePoly> {
    pub fn to_json(&self) -> Value {
        json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;

    type F = Fraction<BracePoly>;

    fn t(x: &str) -> BracePoly {
        BracePoly::generator(gen(x))
    }

    #[test]
    fn canonical_map() {
        let u = t("x").star(&t("y"));
        assert_eq!(F::from_wire(u.clone()).den, BracePoly::identity());
        assert!(F::from_wire(BracePoly::identity()).equiv(&F::neutral()));
        let v = t("z");
        assert!(F::from_wire(u.circ(&v)).equiv(&F::from_wire(u).circ(&F::from_wire(v))));
    }

    #[test]
    fn cross_multiplication() {
        let a = F::new(t("x").circ(&t("y")), t("y"));
        assert!(a.equiv(&F::from_wire(t("x"))));
        assert!(!F::from_wire(t("x")).equiv(&F::from_wire(t("y"))));
        let k = t("z").star(&t("x"));
        let b = F::new(t("x").circ(&k), t("y").circ(&k));
        assert!(b.equiv(&F::new(t("x"), t("y"))));
    }

    #[test]
    fn star_and_inverses() {
        let s = F::from_wire(t("x")).star(&F::from_wire(t("y")));
        assert!(s.equiv(&F::from_wire(t("x").star(&t("y")))));
        let a = F::new(t("x").star(&t("z")), t("y"));
        assert!(a.star(&F::neutral()).equiv(&a));
        assert!(a.star(&a.star_inv()).equiv(&F::neutral()));
        assert!(a.star_inv().star(&a).equiv(&F::neutral()));
        assert!(F::from_wire(t("x")).star_inv().equiv(&F::from_wire(t("x").star_inv())));
        assert!(F::neutral().star_inv().equiv(&F::neutral()));
    }

    #[test]
    fn circle_group() {
        let a = F::new(t("x"), t("y"));
        let inv = a.circ_inv();
        assert_eq!(inv.num, t("y"));
        assert_eq!(inv.den, t("x"));
        assert!(a.circ(&inv).equiv(&F::neutral()));
        let b = F::new(t("z").star(&t("x")), t("x"));
        assert!(a.circ(&b).equiv(&b.circ(&a)));
    }

    #[test]
    fn rendering() {
        assert_eq!(F::new(t("x"), t("y")).to_string(), "(t[x]) / (t[y])");
    }
}
