use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::GeneratorId;

/// Element of the free commutative group on the generators, written
/// multiplicatively as a product of powers.
///
/// Exponents are kept sorted by generator and never zero, so the identity is
/// the empty product and structural equality is group equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupElt {
    exps: Vec<(GeneratorId, i64)>,
}

impl GroupElt {
    pub fn identity() -> Self {
        GroupElt { exps: Vec::new() }
    }

    pub fn generator(x: GeneratorId) -> Self {
        GroupElt { exps: vec![(x, 1)] }
    }

    /// Builds an element from arbitrary `(generator, exponent)` pairs;
    /// repeated generators are summed and zero exponents dropped.
    pub fn from_exponents<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (GeneratorId, i64)>,
    {
        let mut exps: Vec<(GeneratorId, i64)> = pairs.into_iter().collect();
        exps.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(GeneratorId, i64)> = Vec::with_capacity(exps.len());
        for (g, e) in exps {
            match merged.last_mut() {
                Some((last, acc)) if *last == g => *acc += e,
                _ => merged.push((g, e)),
            }
        }
        merged.retain(|(_, e)| *e != 0);
        GroupElt { exps: merged }
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, x: &GeneratorId) -> i64 {
        self.exps
            .binary_search_by(|(g, _)| g.cmp(x))
            .map(|i| self.exps[i].1)
            .unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&GeneratorId, i64)> {
        self.exps.iter().map(|(g, e)| (g, *e))
    }

    pub fn inv(&self) -> Self {
        GroupElt {
            exps: self.exps.iter().map(|(g, e)| (g.clone(), -e)).collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        if n == 0 {
            return GroupElt::identity();
        }
        GroupElt {
            exps: self.exps.iter().map(|(g, e)| (g.clone(), e * n)).collect(),
        }
    }
}

impl Mul<&GroupElt> for &GroupElt {
    type Output = GroupElt;

    fn mul(self, rhs: &GroupElt) -> GroupElt {
        let (a, b) = (&self.exps, &rhs.exps);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        GroupElt { exps: out }
    }
}

impl Mul for GroupElt {
    type Output = GroupElt;

    fn mul(self, rhs: GroupElt) -> GroupElt {
        &self * &rhs
    }
}

/// Lexicographic order: generators are visited in ascending name order over
/// the union of both supports (absent exponents count as 0) and the first
/// differing exponent decides. Translation invariant.
impl Ord for GroupElt {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, e)), None) => return e.cmp(&0),
                (None, Some((_, e))) => return 0.cmp(e),
                (Some((ga, ea)), Some((gb, eb))) => match ga.cmp(gb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                    Ordering::Equal => {
                        match ea.cmp(eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for GroupElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, e)) in self.exps.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroupElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.exps.len()))?;
        for (g, e) in &self.exps {
            map.serialize_entry(g.as_str(), e)?;
        }
        map.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;
    use proptest::prelude::*;

    fn elt(pairs: &[(&str, i64)]) -> GroupElt {
        GroupElt::from_exponents(pairs.iter().map(|(g, e)| (gen(g), *e)))
    }

    #[test]
    fn multiplication() {
        assert_eq!(&elt(&[("x", 1)]) * &elt(&[("y", 1)]), elt(&[("x", 1), ("y", 1)]));
        assert_eq!(
            &elt(&[("x", 2), ("y", -1)]) * &elt(&[("x", -2), ("y", 1)]),
            GroupElt::identity()
        );
        assert_eq!(&elt(&[("x", 1)]) * &elt(&[("x", 1)]), elt(&[("x", 2)]));
    }

    #[test]
    fn inverse() {
        assert_eq!(GroupElt::identity().inv(), GroupElt::identity());
        assert_eq!(elt(&[("x", 1), ("y", -1)]).inv(), elt(&[("x", -1), ("y", 1)]));
    }

    #[test]
    fn lexicographic_comparisons() {
        assert_eq!(GroupElt::identity().cmp(&elt(&[("x", 1)])), Ordering::Less);
        assert_eq!(elt(&[("x", -1)]).cmp(&GroupElt::identity()), Ordering::Less);
        assert_eq!(elt(&[("x", 1), ("y", 2)]).cmp(&elt(&[("x", 2)])), Ordering::Less);
        // y only decides once x agrees
        assert_eq!(elt(&[("y", -5)]).cmp(&elt(&[("x", -1)])), Ordering::Greater);
    }

    #[test]
    fn rendering() {
        assert_eq!(GroupElt::identity().to_string(), "1");
        assert_eq!(elt(&[("y", -1), ("x", 2)]).to_string(), "x^2 y^-1");
        assert_eq!(
            serde_json::to_string(&elt(&[("x", 2), ("y", -1)])).unwrap(),
            r#"{"x":2,"y":-1}"#
        );
    }

    #[test]
    fn from_exponents_merges_and_prunes() {
        assert_eq!(elt(&[("x", 1), ("y", 3), ("x", -1)]), elt(&[("y", 3)]));
        assert_eq!(elt(&[("x", 0)]), GroupElt::identity());
    }

    pub(crate) fn arb_group_elt() -> impl Strategy<Value = GroupElt> {
        prop::collection::vec((0usize..3, -3i64..=3), 0..4)
            .prop_map(|v| GroupElt::from_exponents(v.into_iter().map(|(g, e)| (gen(["x", "y", "z"][g]), e))))
    }

    proptest! {
        #[test]
        fn inverse_cancels(a in arb_group_elt()) {
            prop_assert!((&a * &a.inv()).is_identity());
        }

        #[test]
        fn order_is_translation_invariant(a in arb_group_elt(), b in arb_group_elt(), c in arb_group_elt()) {
            prop_assert_eq!(a.cmp(&b), (&a * &c).cmp(&(&b * &c)));
        }

        #[test]
        fn multiplication_is_commutative_and_associative(a in arb_group_elt(), b in arb_group_elt(), c in arb_group_elt()) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }
    }
}
