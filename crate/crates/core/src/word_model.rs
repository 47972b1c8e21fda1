//! Words in the free group on the free (commutative or non-commutative)
//! monomial semigroup, with the left and right circle extensions, Fox
//! derivatives and the embedding into the canonical wire.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::Neg;

use num_traits::{One, Zero};

use crate::canonical_wire::{BracePoly, GrPoly};
use crate::error::{Error, Result};
use crate::group_algebra::{GeneratorId, GroupElt, GroupRingElt};
use crate::poly::TMono;

/// A letter of the alphabet: an element of the free (commutative) semigroup.
pub trait Monomial: Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display {
    const COMMUTATIVE: bool;

    fn generator(x: GeneratorId) -> Self;

    /// The semigroup product `self ∘ other`.
    fn circ(&self, other: &Self) -> Self;
}

/// Element of the free commutative semigroup: a nonempty multiset of generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CMono(TMono);

impl CMono {
    pub fn new(mono: TMono) -> Option<Self> {
        (!mono.is_one()).then_some(CMono(mono))
    }

    pub fn from_generators<I: IntoIterator<Item = GeneratorId>>(gens: I) -> Option<Self> {
        CMono::new(TMono::from_degrees(gens.into_iter().map(|g| (g, 1))))
    }

    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn as_tmono(&self) -> &TMono {
        &self.0
    }

    pub fn to_group_elt(&self) -> GroupElt {
        self.0.to_group_elt()
    }
}

impl Monomial for CMono {
    const COMMUTATIVE: bool = true;

    fn generator(x: GeneratorId) -> Self {
        CMono(TMono::var(x))
    }

    fn circ(&self, other: &Self) -> Self {
        CMono(self.0.mul(&other.0))
    }
}

impl fmt::Display for CMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (g, d) in self.0.iter() {
            for _ in 0..d {
                if !first {
                    f.write_str(" o ")?;
                }
                write!(f, "{g}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Element of the free semigroup: a nonempty sequence of generators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NCMono(Vec<GeneratorId>);

impl NCMono {
    pub fn new(letters: Vec<GeneratorId>) -> Option<Self> {
        (!letters.is_empty()).then_some(NCMono(letters))
    }

    pub fn letters(&self) -> &[GeneratorId] {
        &self.0
    }
}

impl Monomial for NCMono {
    const COMMUTATIVE: bool = false;

    fn generator(x: GeneratorId) -> Self {
        NCMono(vec![x])
    }

    fn circ(&self, other: &Self) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        NCMono(letters)
    }
}

impl fmt::Display for NCMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" o ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NCMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// Freely reduced word `u_1^{ε_1} ⋆ … ⋆ u_n^{ε_n}` over the monomials `M`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word<M> {
    letters: Vec<(M, Sign)>,
}

impl<M> Default for Word<M> {
    fn default() -> Self {
        Word { letters: Vec::new() }
    }
}

fn push_reduced<M: Eq>(stack: &mut Vec<(M, Sign)>, m: M, s: Sign) {
    if let Some((top, ts)) = stack.last() {
        if *top == m && *ts == -s {
            stack.pop();
            return;
        }
    }
    stack.push((m, s));
}

impl<M: Monomial> Word<M> {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letter(m: M) -> Self {
        Word {
            letters: vec![(m, Sign::Plus)],
        }
    }

    pub fn generator(x: GeneratorId) -> Self {
        Self::letter(M::generator(x))
    }

    /// Reduces an arbitrary sequence of signed letters.
    pub fn from_letters<I: IntoIterator<Item = (M, Sign)>>(letters: I) -> Self {
        let mut stack = Vec::new();
        for (m, s) in letters {
            push_reduced(&mut stack, m, s);
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[(M, Sign)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn append(stack: &mut Vec<(M, Sign)>, w: &Word<M>, sign: Sign) {
        match sign {
            Sign::Plus => {
                for (m, s) in &w.letters {
                    push_reduced(stack, m.clone(), *s);
                }
            }
            Sign::Minus => {
                for (m, s) in w.letters.iter().rev() {
                    push_reduced(stack, m.clone(), -*s);
                }
            }
        }
    }

    /// The free group product `self ⋆ other`.
    pub fn mul(&self, other: &Word<M>) -> Word<M> {
        let mut stack = self.letters.clone();
        Self::append(&mut stack, other, Sign::Plus);
        Word { letters: stack }
    }

    pub fn inv(&self) -> Word<M> {
        Word {
            letters: self.letters.iter().rev().map(|(m, s)| (m.clone(), -*s)).collect(),
        }
    }

    /// `u ∘ l = (Π ρ_l(u_i)^{ε_i}) ⋆ l` with `ρ_l(u_i) = (u_i ∘ l) ⋆ l⁻¹`.
    pub fn circ_mono(&self, l: &M) -> Word<M> {
        let mut stack = Vec::with_capacity(2 * self.len() + 1);
        for (m, s) in &self.letters {
            let prod = m.circ(l);
            match s {
                Sign::Plus => {
                    push_reduced(&mut stack, prod, Sign::Plus);
                    push_reduced(&mut stack, l.clone(), Sign::Minus);
                }
                Sign::Minus => {
                    push_reduced(&mut stack, l.clone(), Sign::Plus);
                    push_reduced(&mut stack, prod, Sign::Minus);
                }
            }
        }
        push_reduced(&mut stack, l.clone(), Sign::Plus);
        Word { letters: stack }
    }

    /// `l ∘ u = l ⋆ Π λ_l(u_i)^{ε_i}` with `λ_l(u_i) = l⁻¹ ⋆ (l ∘ u_i)`.
    pub fn mono_circ(l: &M, u: &Word<M>) -> Word<M> {
        let mut stack = Vec::with_capacity(2 * u.len() + 1);
        stack.push((l.clone(), Sign::Plus));
        for (m, s) in &u.letters {
            let prod = l.circ(m);
            match s {
                Sign::Plus => {
                    push_reduced(&mut stack, l.clone(), Sign::Minus);
                    push_reduced(&mut stack, prod, Sign::Plus);
                }
                Sign::Minus => {
                    push_reduced(&mut stack, prod, Sign::Minus);
                    push_reduced(&mut stack, l.clone(), Sign::Plus);
                }
            }
        }
        Word { letters: stack }
    }

    /// Left extension `u ∘_l v = u ⋆ Π λ_u(v_i)^{δ_i}`, `λ_u(v_i) = u⁻¹ ⋆ (u ∘ v_i)`.
    pub fn circ_l(&self, v: &Word<M>) -> Word<M> {
        let mut stack = self.letters.clone();
        for (m, s) in &v.letters {
            let lambda = self.inv().mul(&self.circ_mono(m));
            Self::append(&mut stack, &lambda, *s);
        }
        Word { letters: stack }
    }

    /// Right extension `u ∘_r v = (Π ρ_v(u_i)^{ε_i}) ⋆ v`, `ρ_v(u_i) = (u_i ∘ v) ⋆ v⁻¹`.
    pub fn circ_r(&self, v: &Word<M>) -> Word<M> {
        let mut stack = Vec::new();
        let v_inv = v.inv();
        for (m, s) in &self.letters {
            let rho = Word::mono_circ(m, v).mul(&v_inv);
            Self::append(&mut stack, &rho, *s);
        }
        Self::append(&mut stack, v, Sign::Plus);
        Word { letters: stack }
    }

    /// `λ_u(v) = u⁻¹ ⋆ (u ∘_l v)`.
    pub fn lambda(&self, v: &Word<M>) -> Word<M> {
        self.inv().mul(&self.circ_l(v))
    }

    /// `ρ_u(v) = (v ∘_r u) ⋆ u⁻¹`.
    pub fn rho(&self, v: &Word<M>) -> Word<M> {
        v.circ_r(self).mul(&self.inv())
    }
}

impl Word<CMono> {
    /// Image in the free commutative group: `Σ ε_i · exponents(u_i)`.
    pub fn project(&self) -> GroupElt {
        GroupElt::from_exponents(self.letters.iter().flat_map(|(m, s)| {
            let sign = s.as_i64();
            m.as_tmono()
                .iter()
                .map(move |(g, d)| (g.clone(), sign * i64::from(d)))
                .collect::<Vec<_>>()
        }))
    }

    /// Walks the word, handing each letter with its initial section (already
    /// projected to the free commutative group) to `visit`.
    fn for_each_section(&self, mut visit: impl FnMut(&CMono, Sign, &GroupElt)) {
        let mut prefix = GroupElt::identity();
        for (m, s) in &self.letters {
            let g = m.to_group_elt();
            match s {
                Sign::Plus => {
                    visit(m, *s, &prefix);
                    prefix = &prefix * &g;
                }
                Sign::Minus => {
                    prefix = &prefix * &g.inv();
                    visit(m, *s, &prefix);
                }
            }
        }
    }

    /// Fox derivative `∂u/∂s` reduced into the group ring of the free
    /// commutative group.
    pub fn fox(&self, s: &CMono) -> GroupRingElt {
        let mut out = GroupRingElt::zero();
        self.for_each_section(|m, sign, section| {
            if m == s {
                out.add_term(sign.as_i64().into(), section.clone());
            }
        });
        out
    }

    /// All nonzero Fox derivatives, keyed by monomial.
    pub fn fox_all(&self) -> BTreeMap<CMono, GroupRingElt> {
        let mut out: BTreeMap<CMono, GroupRingElt> = BTreeMap::new();
        self.for_each_section(|m, sign, section| {
            out.entry(m.clone())
                .or_default()
                .add_term(sign.as_i64().into(), section.clone());
        });
        out.retain(|_, d| !d.is_zero());
        out
    }

    /// `f_u = (1 − Σ_s ∂u/∂s) + Σ_s (∂u/∂s)·t_s`.
    pub fn embed(&self) -> BracePoly {
        let derivatives = self.fox_all();
        let mut constant = GroupRingElt::one();
        let mut poly = GrPoly::zero();
        for (s, d) in derivatives {
            constant = &constant - &d;
            poly.add_term(s.as_tmono().clone(), d);
        }
        poly.add_term(TMono::one(), constant);
        BracePoly::from_parts(poly, self.project())
    }
}

impl<M: fmt::Display> fmt::Display for Word<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, (m, s)) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(".")?;
            }
            write!(f, "[{m}]")?;
            if *s == Sign::Minus {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl<M: fmt::Display> fmt::Debug for Word<M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A word whose alphabet kind is only known at run time (e.g. parsed input).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyWord {
    Commutative(Word<CMono>),
    NonCommutative(Word<NCMono>),
}

impl AnyWord {
    pub fn commutative(&self) -> Result<&Word<CMono>> {
        match self {
            AnyWord::Commutative(w) => Ok(w),
            AnyWord::NonCommutative(_) => Err(Error::WrongAlphabet),
        }
    }

    pub fn project(&self) -> Result<GroupElt> {
        Ok(self.commutative()?.project())
    }

    pub fn fox(&self, s: &CMono) -> Result<GroupRingElt> {
        Ok(self.commutative()?.fox(s))
    }

    pub fn embed(&self) -> Result<BracePoly> {
        Ok(self.commutative()?.embed())
    }
}

impl fmt::Display for AnyWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyWord::Commutative(w) => fmt::Display::fmt(w, f),
            AnyWord::NonCommutative(w) => fmt::Display::fmt(w, f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;
    use num_bigint::BigInt;

    type CWord = Word<CMono>;

    fn m(gens: &[&str]) -> CMono {
        CMono::from_generators(gens.iter().map(|g| gen(g))).unwrap()
    }

    fn w(letters: &[(&[&str], i8)]) -> CWord {
        Word::from_letters(
            letters
                .iter()
                .map(|(g, s)| (m(g), if *s > 0 { Sign::Plus } else { Sign::Minus })),
        )
    }

    fn ge(pairs: &[(&str, i64)]) -> GroupElt {
        GroupElt::from_exponents(pairs.iter().map(|(g, e)| (gen(g), *e)))
    }

    #[test]
    fn monomial_products() {
        assert_eq!(m(&["x"]).circ(&m(&["y"])), m(&["x", "y"]));
        assert_eq!(m(&["x", "y"]).circ(&m(&["y"])).to_string(), "x o y o y");
        assert_eq!(m(&["x"]).circ(&m(&["y"])), m(&["y"]).circ(&m(&["x"])));
        let (x, y) = (NCMono::generator(gen("x")), NCMono::generator(gen("y")));
        assert_ne!(x.circ(&y), y.circ(&x));
        assert!(CMono::new(TMono::one()).is_none());
        assert!(NCMono::new(vec![]).is_none());
    }

    #[test]
    fn free_reduction() {
        assert!(w(&[(&["x"], 1), (&["x"], -1)]).is_empty());
        let u = w(&[(&["x"], 1), (&["y"], -1)]);
        assert_eq!(u.mul(&CWord::empty()), u);
        assert_eq!(u.inv(), w(&[(&["y"], 1), (&["x"], -1)]));
        assert!(u.mul(&u.inv()).is_empty());
    }

    #[test]
    fn word_times_monomial() {
        let x = w(&[(&["x"], 1)]);
        assert_eq!(x.circ_mono(&m(&["y"])), w(&[(&["x", "y"], 1)]));
        let xy = w(&[(&["x"], 1), (&["y"], 1)]);
        let expected = w(&[(&["x", "z"], 1), (&["z"], -1), (&["y", "z"], 1)]);
        assert_eq!(xy.circ_mono(&m(&["z"])), expected);
        assert_eq!(Word::mono_circ(&m(&["x"]), &w(&[(&["y"], 1)])), w(&[(&["x", "y"], 1)]));
    }

    #[test]
    fn left_and_right_extensions() {
        let xy = w(&[(&["x"], 1), (&["y"], 1)]);
        let z = w(&[(&["z"], 1)]);
        let expected = w(&[(&["x", "z"], 1), (&["z"], -1), (&["y", "z"], 1)]);
        assert_eq!(xy.circ_r(&z), expected);
        assert_eq!(xy.circ_l(&CWord::empty()), xy);
        assert_eq!(CWord::empty().circ_r(&xy), xy);
        assert_eq!(CWord::empty().circ_l(&xy), xy);
        assert_eq!(xy.circ_r(&CWord::empty()), xy);
        let (x, y) = (w(&[(&["x"], 1)]), w(&[(&["y"], 1)]));
        assert_eq!(x.circ_l(&y), w(&[(&["x", "y"], 1)]));
        assert_eq!(x.circ_r(&y), w(&[(&["x", "y"], 1)]));
    }

    #[test]
    fn projection() {
        assert_eq!(w(&[(&["x", "y"], 1)]).project(), ge(&[("x", 1), ("y", 1)]));
        assert_eq!(CWord::empty().project(), GroupElt::identity());
        let dot = w(&[(&["x"], -1), (&["x", "y"], 1), (&["y"], -1)]);
        assert!(dot.project().is_identity());
    }

    #[test]
    fn fox_derivatives() {
        let u = w(&[(&["x"], 1), (&["x", "y"], 1), (&["x"], -1)]);
        let one_minus_xy = GroupRingElt::from_terms([
            (BigInt::from(1), GroupElt::identity()),
            (BigInt::from(-1), ge(&[("x", 1), ("y", 1)])),
        ]);
        assert_eq!(u.fox(&m(&["x"])), one_minus_xy);
        assert_eq!(u.fox(&m(&["x"])).to_string(), "1 - x y");
        assert_eq!(u.fox(&m(&["x", "y"])), GroupRingElt::from_group(ge(&[("x", 1)])));
        assert!(CWord::empty().fox(&m(&["x"])).is_zero());
        assert!(u.fox(&m(&["z"])).is_zero());
    }

    #[test]
    fn embedding_vectors() {
        let u = w(&[(&["x", "z"], 1), (&["z"], -1), (&["y", "z"], 1)]);
        assert_eq!(u.embed().to_string(), "-x*t[z] + t[x]t[z] + x*t[y]t[z]");
        let d = w(&[(&["x"], -1), (&["x", "y"], 1), (&["y"], -1)]);
        assert_eq!(d.embed().to_string(), "2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]");
        assert!(CWord::empty().embed().is_identity());
    }

    #[test]
    fn alphabet_kind_is_checked_at_runtime() {
        let nc = AnyWord::NonCommutative(Word::generator(gen("x")));
        assert_eq!(nc.project(), Err(Error::WrongAlphabet));
        assert_eq!(nc.fox(&m(&["x"])), Err(Error::WrongAlphabet));
        assert!(matches!(nc.embed(), Err(Error::WrongAlphabet)));
        let c = AnyWord::Commutative(Word::generator(gen("x")));
        assert_eq!(c.project(), Ok(ge(&[("x", 1)])));
    }

    #[test]
    fn rendering() {
        let u = w(&[(&["x", "y"], 1), (&["z"], -1), (&["y", "z"], 1)]);
        assert_eq!(u.to_string(), "[x o y].[z]^-1.[y o z]");
        assert_eq!(CWord::empty().to_string(), "e");
    }
}
