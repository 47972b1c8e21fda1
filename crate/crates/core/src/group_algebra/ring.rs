use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use super::GroupElt;
use crate::error::{Error, Result};

/// Element of the integral group ring of the free commutative group: a finite
/// formal sum of group elements with nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupRingElt {
    terms: BTreeMap<GroupElt, BigInt>,
}

impl GroupRingElt {
    pub fn from_group(g: GroupElt) -> Self {
        Self::term(BigInt::one(), g)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::term(c.into(), GroupElt::identity())
    }

    pub fn term(c: BigInt, g: GroupElt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(g, c);
        }
        GroupRingElt { terms }
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (BigInt, GroupElt)>,
    {
        let mut out = GroupRingElt::default();
        for (c, g) in terms {
            out.add_term(c, g);
        }
        out
    }

    pub fn coeff(&self, g: &GroupElt) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    /// Terms in ascending group order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GroupElt, &BigInt)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub(crate) fn add_term(&mut self, c: BigInt, g: GroupElt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Sum of all coefficients.
    pub fn augment(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// The order-maximal group element of the support.
    pub fn initial(&self) -> Result<&GroupElt> {
        self.terms.keys().next_back().ok_or(Error::ZeroElement)
    }

    /// `Some(g)` when the element is exactly `1·g`.
    pub fn as_group_elt(&self) -> Option<&GroupElt> {
        if self.terms.len() != 1 {
            return None;
        }
        let (g, c) = self.terms.iter().next()?;
        c.is_one().then_some(g)
    }

    /// Multiplication by the group element `g`; just a relabelling of the support.
    pub fn translate(&self, g: &GroupElt) -> Self {
        if g.is_identity() {
            return self.clone();
        }
        GroupRingElt {
            terms: self.terms.iter().map(|(h, c)| (h * g, c.clone())).collect(),
        }
    }

    /// Identity term first, then descending group order.
    pub fn display_order(&self) -> impl Iterator<Item = (&GroupElt, &BigInt)> {
        let one = GroupElt::identity();
        let constant = self.terms.get_key_value(&one);
        constant
            .into_iter()
            .chain(self.terms.iter().rev().filter(|(g, _)| !g.is_identity()))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return GroupRingElt::default();
        }
        GroupRingElt {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c * k)).collect(),
        }
    }
}

impl Add<&GroupRingElt> for &GroupRingElt {
    type Output = GroupRingElt;

    fn add(self, rhs: &GroupRingElt) -> GroupRingElt {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (g, c) in &small.terms {
            out.add_term(c.clone(), g.clone());
        }
        out
    }
}

impl Sub<&GroupRingElt> for &GroupRingElt {
    type Output = GroupRingElt;

    fn sub(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(-c, g.clone());
        }
        out
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;

    fn neg(self) -> GroupRingElt {
        GroupRingElt {
            terms: self.terms.iter().map(|(g, c)| (g.clone(), -c)).collect(),
        }
    }
}

impl Mul<&GroupRingElt> for &GroupRingElt {
    type Output = GroupRingElt;

    fn mul(self, rhs: &GroupRingElt) -> GroupRingElt {
        if self.is_empty() || rhs.is_empty() {
            return GroupRingElt::default();
        }
        let mut out = GroupRingElt::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(ca * cb, a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for GroupRingElt {
            type Output = GroupRingElt;
            fn $m(self, rhs: GroupRingElt) -> GroupRingElt {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        -&self
    }
}

impl Zero for GroupRingElt {
    fn zero() -> Self {
        GroupRingElt::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for GroupRingElt {
    fn one() -> Self {
        GroupRingElt::from_int(1)
    }
}

/// Writes `|c|·g` without its sign: `g` when `|c| = 1` and `g ≠ 1`, `|c|` when
/// `g = 1`, `|c|*g` otherwise.
pub(crate) fn write_unsigned_term(f: &mut impl fmt::Write, c: &BigInt, g: &GroupElt) -> fmt::Result {
    let abs = c.abs();
    if g.is_identity() {
        write!(f, "{abs}")
    } else if abs.is_one() {
        write!(f, "{g}")
    } else {
        write!(f, "{abs}*{g}")
    }
}

/// The identity term first, then the rest in descending group order:
/// `2 - x^-1`, `1 - x y`.
impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (g, c)) in self.display_order().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_unsigned_term(f, c, g)?;
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct Terms<'a>(&'a GroupRingElt);

#[derive(Serialize)]
struct TermJson<'a> {
    coeff: String,
    elt: &'a GroupElt,
}

impl Serialize for Terms<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for (g, c) in self.0.display_order() {
            seq.serialize_element(&TermJson {
                coeff: c.to_string(),
                elt: g,
            })?;
        }
        seq.end()
    }
}

/// `{"terms":[{"coeff":"<decimal>","elt":{"x":2,"y":-1}}]}`
impl Serialize for GroupRingElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("GroupRingElt", 1)?;
        st.serialize_field("terms", &Terms(self))?;
        st.end()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::group_algebra::gen;
    use proptest::prelude::*;

    fn g(pairs: &[(&str, i64)]) -> GroupElt {
        GroupElt::from_exponents(pairs.iter().map(|(n, e)| (gen(n), *e)))
    }

    fn r(terms: &[(i64, &[(&str, i64)])]) -> GroupRingElt {
        GroupRingElt::from_terms(terms.iter().map(|(c, e)| (BigInt::from(*c), g(e))))
    }

    #[test]
    fn addition_cancels() {
        let one_minus_x = r(&[(1, &[]), (-1, &[("x", 1)])]);
        assert_eq!(&one_minus_x + &r(&[(1, &[("x", 1)])]), GroupRingElt::one());
        let f = r(&[(2, &[]), (-1, &[("x", -1)])]);
        assert_eq!(&f + &GroupRingElt::zero(), f);
        assert!((&f + &r(&[(-2, &[]), (1, &[("x", -1)])])).is_zero());
        assert!((&f + &-&f).is_zero());
    }

    #[test]
    fn convolution() {
        let a = r(&[(1, &[]), (-1, &[("x", 1)])]);
        let b = r(&[(1, &[]), (1, &[("x", 1)])]);
        assert_eq!(&a * &b, r(&[(1, &[]), (-1, &[("x", 2)])]));
        assert_eq!(&r(&[(1, &[("x", 1)])]) * &r(&[(1, &[("x", -1)])]), GroupRingElt::one());
        assert!((&a * &GroupRingElt::zero()).is_zero());
    }

    #[test]
    fn augmentation() {
        assert_eq!(r(&[(2, &[]), (-1, &[("x", -1)])]).augment(), BigInt::from(1));
        assert_eq!(GroupRingElt::zero().augment(), BigInt::from(0));
        assert_eq!(r(&[(1, &[("x", 1), ("y", -1)])]).augment(), BigInt::from(1));
    }

    #[test]
    fn initial_term() {
        assert_eq!(r(&[(2, &[]), (-1, &[("x", 1)])]).initial(), Ok(&g(&[("x", 1)])));
        assert_eq!(r(&[(1, &[("x", -1)]), (1, &[("x", 1)])]).initial(), Ok(&g(&[("x", 1)])));
        assert_eq!(r(&[(5, &[])]).initial(), Ok(&GroupElt::identity()));
        assert_eq!(GroupRingElt::zero().initial(), Err(Error::ZeroElement));
    }

    #[test]
    fn group_elements_inside_the_ring() {
        assert_eq!(
            r(&[(1, &[("x", 1), ("y", 1)])]).as_group_elt(),
            Some(&g(&[("x", 1), ("y", 1)]))
        );
        assert_eq!(r(&[(2, &[("x", 1)])]).as_group_elt(), None);
        assert_eq!(r(&[(1, &[]), (1, &[("x", 1)])]).as_group_elt(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(r(&[(2, &[]), (-1, &[("x", -1)])]).to_string(), "2 - x^-1");
        assert_eq!(r(&[(1, &[]), (-1, &[("x", 1), ("y", 1)])]).to_string(), "1 - x y");
        assert_eq!(r(&[(-3, &[("x", 2)]), (1, &[("y", 1)])]).to_string(), "-3*x^2 + y");
        assert_eq!(GroupRingElt::zero().to_string(), "0");
        assert_eq!(
            serde_json::to_string(&r(&[(2, &[]), (-1, &[("x", -1)])])).unwrap(),
            r#"{"terms":[{"coeff":"2","elt":{}},{"coeff":"-1","elt":{"x":-1}}]}"#
        );
    }

    pub(crate) fn arb_group_ring_elt() -> impl Strategy<Value = GroupRingElt> {
        prop::collection::vec((-4i64..=4, prop::collection::vec((0usize..3, -2i64..=2), 0..3)), 0..5).prop_map(
            |terms| {
                GroupRingElt::from_terms(terms.into_iter().map(|(c, e)| {
                    (
                        BigInt::from(c),
                        GroupElt::from_exponents(e.into_iter().map(|(i, x)| (gen(["x", "y", "z"][i]), x))),
                    )
                }))
            },
        )
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_group_ring_elt(), b in arb_group_ring_elt(), c in arb_group_ring_elt()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn initial_term_is_multiplicative(a in arb_group_ring_elt(), b in arb_group_ring_elt()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let prod = &a * &b;
            prop_assert!(!prod.is_zero());
            prop_assert_eq!(prod.initial().unwrap(), &(a.initial().unwrap() * b.initial().unwrap()));
        }

        #[test]
        fn augmentation_is_a_ring_morphism(a in arb_group_ring_elt(), b in arb_group_ring_elt()) {
            prop_assert_eq!((&a * &b).augment(), a.augment() * b.augment());
            prop_assert_eq!((&a + &b).augment(), a.augment() + b.augment());
        }
    }
}
