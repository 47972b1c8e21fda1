//! Integer polynomials with coefficient sum one under the twisted addition
//! `f ⊕ g = f + g − 1` and the ordinary product: the wire where both
//! operations commute. The augmentation of the canonical wire lands here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::Value;

use crate::brace_fractions::CommutativeWire;
use crate::canonical_wire::BracePoly;
use crate::error::{Error, Result};
use crate::group_algebra::GeneratorId;
use crate::poly::{IntPoly, TMono};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RadicalPoly(IntPoly);

impl RadicalPoly {
    pub fn new(p: IntPoly) -> Result<Self> {
        let sum = p.coeff_sum();
        if sum.is_one() {
            Ok(RadicalPoly(p))
        } else {
            Err(Error::NotAMember(format!("coefficient sum {sum}, expected 1")))
        }
    }

    pub fn one() -> Self {
        RadicalPoly(IntPoly::one())
    }

    pub fn var(x: GeneratorId) -> Self {
        RadicalPoly(IntPoly::var(x))
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    /// `f ⊕ g = f + g − 1`
    pub fn star(&self, other: &Self) -> Self {
        RadicalPoly(self.0.add(&other.0).sub(&IntPoly::one()))
    }

    /// `2 − f`
    pub fn star_inv(&self) -> Self {
        RadicalPoly(IntPoly::constant(BigInt::from(2)).sub(&self.0))
    }

    pub fn circ(&self, other: &Self) -> Self {
        RadicalPoly(self.0.mul(&other.0))
    }

    /// Applies the augmentation to every coefficient of a canonical-wire element.
    pub fn project(f: &BracePoly) -> Self {
        RadicalPoly(f.poly().map_coeffs(|c| c.augment()))
    }

    /// Substitutes `t[x] ↦ t[x] + 1`. The result has constant term 1.
    pub fn shift(&self) -> IntPoly {
        shift(&self.0)
    }

    pub fn to_json(&self) -> Value {
        self.0.to_json()
    }
}

/// Substitutes `t[x] ↦ t[x] + 1` in an arbitrary integer polynomial.
pub fn shift(p: &IntPoly) -> IntPoly {
    let mut out = IntPoly::zero();
    for (m, c) in p.terms() {
        let mut term = IntPoly::constant(c.clone());
        for (x, d) in m.iter() {
            let factor = IntPoly::from_terms([(TMono::var(x.clone()), BigInt::one()), (TMono::one(), BigInt::one())]);
            for _ in 0..d {
                term = term.mul(&factor);
            }
        }
        out = out.add(&term);
    }
    out
}

impl CommutativeWire for RadicalPoly {
    fn identity() -> Self {
        RadicalPoly::one()
    }
    fn star(&self, other: &Self) -> Self {
        RadicalPoly::star(self, other)
    }
    fn star_inv(&self) -> Self {
        RadicalPoly::star_inv(self)
    }
    fn circ(&self, other: &Self) -> Self {
        RadicalPoly::circ(self, other)
    }
    fn wire_eq(&self, other: &Self) -> bool {
        self == other
    }
}

impl fmt::Display for RadicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for RadicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;

    fn t(x: &str) -> RadicalPoly {
        RadicalPoly::var(gen(x))
    }

    fn int_poly(terms: &[(i64, &[&str])]) -> IntPoly {
        IntPoly::from_terms(
            terms
                .iter()
                .map(|(c, m)| (TMono::from_degrees(m.iter().map(|g| (gen(g), 1))), BigInt::from(*c))),
        )
    }

    #[test]
    fn twisted_addition() {
        assert_eq!(
            t("x").star(&t("y")).poly(),
            &int_poly(&[(1, &["x"]), (1, &["y"]), (-1, &[])])
        );
        assert_eq!(t("x").star(&RadicalPoly::one()), t("x"));
        let f = t("x").circ(&t("y")).star(&t("z"));
        assert_eq!(f.star_inv().poly(), &IntPoly::constant(BigInt::from(2)).sub(f.poly()));
        assert_eq!(f.star(&f.star_inv()), RadicalPoly::one());
    }

    #[test]
    fn product() {
        assert_eq!(t("x").circ(&t("y")).to_string(), "t[x]t[y]");
        assert_eq!(t("x").circ(&RadicalPoly::one()), t("x"));
        // f(g ⊕ h) = fg ⊕ f⁻¹ ⊕ fh
        let (f, g, h) = (t("x").star(&t("y")), t("y"), t("z").circ(&t("x")));
        assert_eq!(f.circ(&g.star(&h)), f.circ(&g).star(&f.star_inv()).star(&f.circ(&h)));
    }

    #[test]
    fn augmentation_projection() {
        let d = BracePoly::generator(gen("x")).dot(&BracePoly::generator(gen("y")));
        assert_eq!(
            RadicalPoly::project(&d).poly(),
            &int_poly(&[(2, &[]), (-1, &["x"]), (1, &["x", "y"]), (-1, &["y"])])
        );
        let (x, y) = (BracePoly::generator(gen("x")), BracePoly::generator(gen("y")));
        let expected = int_poly(&[(1, &["x"]), (1, &["y"]), (-1, &[])]);
        assert_eq!(RadicalPoly::project(&x.star(&y)).poly(), &expected);
        assert_eq!(RadicalPoly::project(&y.star(&x)).poly(), &expected);
        assert_eq!(RadicalPoly::project(&BracePoly::identity()), RadicalPoly::one());
    }

    #[test]
    fn shift_by_one() {
        let p = t("x").circ(&t("y")).shift();
        assert_eq!(p, int_poly(&[(1, &["x", "y"]), (1, &["x"]), (1, &["y"]), (1, &[])]));
        assert_eq!(RadicalPoly::one().shift(), IntPoly::one());
        let f = t("x").star(&t("y").circ(&t("y"))).star_inv();
        assert_eq!(f.shift().constant_term(), BigInt::one());
    }

    #[test]
    fn rejects_wrong_coefficient_sum() {
        assert!(RadicalPoly::new(int_poly(&[(1, &["x"]), (1, &["y"])])).is_err());
        assert!(RadicalPoly::new(int_poly(&[(2, &["x"]), (-1, &["y"])])).is_ok());
    }
}
