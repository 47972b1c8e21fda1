//! The canonical polynomial model of the free commutative wire.
//!
//! Elements are polynomials in `t[x]` with group-ring coefficients whose
//! coefficients sum to `1` and whose evaluation at `t[x] ↦ [x]` is a single
//! group element. The circle operation is the polynomial product and
//! `f ⋆ g = f + eval_X(f)·(g − 1)`. Two elements of the free commutative wire
//! are equal exactly when their polynomials are, so `==` decides the word
//! problem.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::group_algebra::{GeneratorId, GroupElt, GroupRingElt};
use crate::poly::{SparsePoly, TMono};

/// Polynomial in `t[x]` over the group ring, not necessarily a wire member.
pub type GrPoly = SparsePoly<GroupRingElt>;

/// Substitutes `t[x] ↦ 1`.
pub fn eval_one(p: &GrPoly) -> GroupRingElt {
    p.coeff_sum()
}

/// Substitutes `t[x] ↦ 0`, i.e. the constant coefficient.
pub fn eval_zero(p: &GrPoly) -> GroupRingElt {
    p.constant_term()
}

/// Substitutes `t[x] ↦ [x]` and sums in the group ring.
pub fn eval_generators_sum(p: &GrPoly) -> GroupRingElt {
    let mut out = GroupRingElt::zero();
    for (m, c) in p.terms() {
        out = &out + &c.translate(&m.to_group_elt());
    }
    out
}

/// `eval_X` landing in the group: fails unless the substitution yields `1·g`.
pub fn eval_generators(p: &GrPoly) -> Result<GroupElt> {
    let sum = eval_generators_sum(p);
    sum.as_group_elt()
        .cloned()
        .ok_or_else(|| Error::NotAMember(format!("eval_X = {sum} is not a group element")))
}

/// Element of the canonical wire.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BracePoly {
    poly: GrPoly,
    // eval_X(poly), kept alongside since every ⋆ needs it
    value: GroupElt,
}

impl BracePoly {
    /// Validating constructor: rejects polynomials outside the wire.
    pub fn new(poly: GrPoly) -> Result<Self> {
        let sum = eval_one(&poly);
        if !sum.is_one() {
            return Err(Error::NotAMember(format!("eval_1 = {sum}, expected 1")));
        }
        let value = eval_generators(&poly)?;
        Ok(BracePoly { poly, value })
    }

    pub(crate) fn from_parts(poly: GrPoly, value: GroupElt) -> Self {
        debug_assert!(eval_one(&poly).is_one(), "eval_1 invariant broken: {poly}");
        debug_assert_eq!(eval_generators(&poly).as_ref(), Ok(&value));
        BracePoly { poly, value }
    }

    pub fn identity() -> Self {
        BracePoly {
            poly: GrPoly::one(),
            value: GroupElt::identity(),
        }
    }

    /// The image `t[x]` of a generator.
    pub fn generator(x: GeneratorId) -> Self {
        BracePoly {
            poly: GrPoly::var(x.clone()),
            value: GroupElt::generator(x),
        }
    }

    pub fn poly(&self) -> &GrPoly {
        &self.poly
    }

    pub fn into_poly(self) -> GrPoly {
        self.poly
    }

    pub fn is_identity(&self) -> bool {
        self.poly == GrPoly::one()
    }

    /// `eval_X(self)` as a group element.
    pub fn eval_x(&self) -> &GroupElt {
        &self.value
    }

    pub fn eval_1(&self) -> GroupRingElt {
        eval_one(&self.poly)
    }

    pub fn eval_0(&self) -> GroupRingElt {
        eval_zero(&self.poly)
    }

    /// Circle operation: the polynomial product.
    pub fn circ(&self, other: &BracePoly) -> BracePoly {
        BracePoly::from_parts(self.poly.mul(&other.poly), &self.value * &other.value)
    }

    /// `f ⋆ g = f + eval_X(f)·(g − 1)`.
    pub fn star(&self, other: &BracePoly) -> BracePoly {
        if other.is_identity() {
            return self.clone();
        }
        let mut out = self.poly.clone();
        for (m, c) in other.poly.terms() {
            let shifted = if m.is_one() {
                c - &GroupRingElt::one()
            } else {
                c.clone()
            };
            out.add_term(m.clone(), shifted.translate(&self.value));
        }
        if other.poly.constant_term().is_zero() {
            out.add_term(TMono::one(), -GroupRingElt::from_group(self.value.clone()));
        }
        BracePoly::from_parts(out, &self.value * &other.value)
    }

    /// `1 − eval_X(f)⁻¹·(f − 1)`, the inverse for `⋆`.
    pub fn star_inv(&self) -> BracePoly {
        let inv = self.value.inv();
        let mut out = GrPoly::one();
        for (m, c) in self.poly.terms() {
            let shifted = if m.is_one() {
                c - &GroupRingElt::one()
            } else {
                c.clone()
            };
            out.add_term(m.clone(), -shifted.translate(&inv));
        }
        if self.poly.constant_term().is_zero() {
            out.add_term(TMono::one(), GroupRingElt::from_group(inv.clone()));
        }
        BracePoly::from_parts(out, inv)
    }

    /// `λ_u(v) = u⁻¹ ⋆ (u ∘ v)`.
    pub fn lambda(&self, v: &BracePoly) -> BracePoly {
        self.star_inv().star(&self.circ(v))
    }

    /// `ρ_u(v) = (v ∘ u) ⋆ u⁻¹`.
    pub fn rho(&self, v: &BracePoly) -> BracePoly {
        v.circ(self).star(&self.star_inv())
    }

    /// `u · v = u⁻¹ ⋆ (u ∘ v) ⋆ v⁻¹`, the generators of the square of the wire.
    pub fn dot(&self, v: &BracePoly) -> BracePoly {
        self.star_inv().star(&self.circ(v).star(&v.star_inv()))
    }

    pub fn to_json(&self) -> Value {
        self.poly.to_json()
    }
}

impl fmt::Display for BracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for BracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl TryFrom<GrPoly> for BracePoly {
    type Error = Error;

    fn try_from(poly: GrPoly) -> Result<Self> {
        BracePoly::new(poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;
    use num_bigint::BigInt;

    fn t(x: &str) -> BracePoly {
        BracePoly::generator(gen(x))
    }

    fn ge(pairs: &[(&str, i64)]) -> GroupElt {
        GroupElt::from_exponents(pairs.iter().map(|(g, e)| (gen(g), *e)))
    }

    fn mono(vars: &[&str]) -> TMono {
        TMono::from_degrees(vars.iter().map(|g| (gen(g), 1)))
    }

    /// `(coefficient, group element exponents, monomial letters)`
    type Term<'a> = (i64, &'a [(&'a str, i64)], &'a [&'a str]);

    fn poly(terms: &[Term]) -> GrPoly {
        GrPoly::from_terms(
            terms
                .iter()
                .map(|(c, g, m)| (mono(m), GroupRingElt::term(BigInt::from(*c), ge(g)))),
        )
    }

    #[test]
    fn generator_and_identity() {
        assert_eq!(t("x").to_string(), "t[x]");
        assert_eq!(t("x").eval_1(), GroupRingElt::one());
        assert_eq!(t("x").eval_x(), &ge(&[("x", 1)]));
        assert_eq!(t("x"), t("x"));
        assert_eq!(BracePoly::identity().to_string(), "1");
    }

    #[test]
    fn star_of_generators() {
        let expected = poly(&[(1, &[], &["x"]), (1, &[("x", 1)], &["y"]), (-1, &[("x", 1)], &[])]);
        assert_eq!(t("x").star(&t("y")).poly(), &expected);
        assert_eq!(t("x").star(&t("y")).to_string(), "-x + t[x] + x*t[y]");
        let g = t("x").star(&t("y"));
        assert_eq!(BracePoly::identity().star(&g), g);
        assert_eq!(g.star(&BracePoly::identity()), g);
    }

    #[test]
    fn circ_distributes_over_the_generator_star() {
        let lhs = t("x").star(&t("y")).circ(&t("z"));
        let expected = poly(&[
            (1, &[], &["x", "z"]),
            (1, &[("x", 1)], &["y", "z"]),
            (-1, &[("x", 1)], &["z"]),
        ]);
        assert_eq!(lhs.poly(), &expected);
        assert_eq!(lhs.circ(&BracePoly::identity()), lhs);
        assert_eq!(t("x").circ(&t("y")).to_string(), "t[x]t[y]");
    }

    #[test]
    fn star_inverse_of_generator() {
        // 1 + x^-1 - x^-1 t[x]
        let expected = poly(&[(1, &[], &[]), (1, &[("x", -1)], &[]), (-1, &[("x", -1)], &["x"])]);
        let inv = t("x").star_inv();
        assert_eq!(inv.poly(), &expected);
        assert!(t("x").star(&inv).is_identity());
        assert!(inv.star(&t("x")).is_identity());
        assert_eq!(BracePoly::identity().star_inv(), BracePoly::identity());
    }

    #[test]
    fn evaluations() {
        let f = t("x").star(&t("y"));
        assert_eq!(eval_generators(f.poly()), Ok(ge(&[("x", 1), ("y", 1)])));
        assert_eq!(eval_generators(&GrPoly::one()), Ok(GroupElt::identity()));
        assert!(eval_one(&GrPoly::zero()).is_zero());
        assert!(eval_one(&t("x").poly().sub(t("y").poly())).is_zero());

        let d = t("x").dot(&t("y"));
        assert_eq!(d.eval_0(), GroupRingElt::from_int(2));
        assert!(t("x").eval_0().is_zero());
        assert_eq!(BracePoly::identity().eval_0(), GroupRingElt::one());
    }

    #[test]
    fn dot_of_generators() {
        // 2 - x^-1 t[x] - t[y] + x^-1 t[x]t[y]
        let expected = poly(&[
            (2, &[], &[]),
            (-1, &[("x", -1)], &["x"]),
            (-1, &[], &["y"]),
            (1, &[("x", -1)], &["x", "y"]),
        ]);
        let d = t("x").dot(&t("y"));
        assert_eq!(d.poly(), &expected);
        assert_eq!(d.to_string(), "2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]");
        assert!(BracePoly::identity().dot(&t("y")).is_identity());
        assert!(t("x").dot(&BracePoly::identity()).is_identity());
    }

    #[test]
    fn lambda_and_rho_units() {
        let u = t("x").star(&t("y"));
        let v = t("z").circ(&t("x"));
        assert_eq!(BracePoly::identity().lambda(&v), v);
        assert!(u.lambda(&BracePoly::identity()).is_identity());
        assert_eq!(BracePoly::identity().rho(&v), v);
        assert!(u.rho(&BracePoly::identity()).is_identity());
    }

    #[test]
    fn equality_decides_star_commutation() {
        assert_ne!(t("x").star(&t("y")), t("y").star(&t("x")));
        assert_eq!(t("x").circ(&t("y")), t("y").circ(&t("x")));
    }

    #[test]
    fn raw_constructor_rejects_non_members() {
        assert!(matches!(BracePoly::new(GrPoly::zero()), Err(Error::NotAMember(_))));
        // coefficient sum 1 but eval_X = 2x - x^2... not a group element
        let bad = poly(&[(2, &[], &["x"]), (-1, &[], &["x", "x"])]);
        assert!(matches!(BracePoly::new(bad), Err(Error::NotAMember(_))));
        let good = t("x").star(&t("y")).into_poly();
        assert_eq!(BracePoly::new(good.clone()).map(|b| b.into_poly()), Ok(good));
    }
}
