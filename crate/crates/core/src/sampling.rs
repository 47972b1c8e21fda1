//! Seeded random inputs for the property suites.
//!
//! Everything is driven by a [`ChaCha8Rng`] seeded from a `u64`, so a seed
//! reproduces a run exactly. Parameters:
//!
//! * expressions: at most 3 generators (`x`, `y`, `z`), depth at most 5, a
//!   node becomes a leaf with probability [`ExprParams::leaf_prob`];
//! * fractions (in the suites): numerators of depth at most 3, denominators
//!   of depth at most 2, since every fraction operation multiplies
//!   denominators;
//! * words: at most 6 letters, monomials of degree 1..=3, at most 3 generators;
//! * group-ring elements: 1..=4 terms, coefficients in `-3..=3`, exponents in
//!   `-2..=2`.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::expr::{Expr, FracExpr};
use crate::group_algebra::{GeneratorId, GroupElt, GroupRingElt};
use crate::word_model::{CMono, Monomial, NCMono, Sign, Word};

pub use rand::SeedableRng;

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The first `k` names of `x, y, z, w, v, ...`.
pub fn generators(k: usize) -> Vec<GeneratorId> {
    const NAMES: [&str; 8] = ["x", "y", "z", "w", "v", "s", "r", "q"];
    NAMES[..k.min(NAMES.len())]
        .iter()
        .map(|n| GeneratorId::new(n).expect("valid name"))
        .collect()
}

#[derive(Clone, Copy, Debug)]
pub struct ExprParams {
    pub generators: usize,
    pub max_depth: usize,
    pub leaf_prob: f64,
}

impl Default for ExprParams {
    fn default() -> Self {
        ExprParams {
            generators: 3,
            max_depth: 5,
            leaf_prob: 0.4,
        }
    }
}

impl ExprParams {
    pub fn with_depth(self, max_depth: usize) -> Self {
        ExprParams { max_depth, ..self }
    }
}

pub fn expr(rng: &mut SeededRng, p: &ExprParams) -> Expr {
    let gens = generators(p.generators);
    expr_rec(rng, p, &gens, p.max_depth)
}

fn expr_rec(rng: &mut SeededRng, p: &ExprParams, gens: &[GeneratorId], depth: usize) -> Expr {
    if depth == 0 || rng.gen_bool(p.leaf_prob) {
        // identity is a rare leaf
        return if rng.gen_ratio(1, 8) {
            Expr::Identity
        } else {
            Expr::Gen(gens[rng.gen_range(0..gens.len())].clone())
        };
    }
    match rng.gen_range(0..5) {
        0 | 1 => Expr::star(expr_rec(rng, p, gens, depth - 1), expr_rec(rng, p, gens, depth - 1)),
        2 => Expr::star_inv(expr_rec(rng, p, gens, depth - 1)),
        _ => Expr::circ(expr_rec(rng, p, gens, depth - 1), expr_rec(rng, p, gens, depth - 1)),
    }
}

/// `frac(num, den)`.
pub fn frac_expr(rng: &mut SeededRng, num: &ExprParams, den: &ExprParams) -> FracExpr {
    FracExpr::frac(expr(rng, num), expr(rng, den))
}

#[derive(Clone, Copy, Debug)]
pub struct WordParams {
    pub max_letters: usize,
    pub max_degree: u32,
    pub generators: usize,
}

impl Default for WordParams {
    fn default() -> Self {
        WordParams {
            max_letters: 6,
            max_degree: 3,
            generators: 3,
        }
    }
}

pub fn cmono(rng: &mut SeededRng, p: &WordParams) -> CMono {
    let gens = generators(p.generators);
    let degree = rng.gen_range(1..=p.max_degree);
    CMono::from_generators((0..degree).map(|_| gens[rng.gen_range(0..gens.len())].clone())).expect("degree >= 1")
}

pub fn ncmono(rng: &mut SeededRng, p: &WordParams) -> NCMono {
    let gens = generators(p.generators);
    let degree = rng.gen_range(1..=p.max_degree);
    NCMono::new(
        (0..degree)
            .map(|_| gens[rng.gen_range(0..gens.len())].clone())
            .collect(),
    )
    .expect("degree >= 1")
}

fn sign(rng: &mut SeededRng) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn word_with<M: Monomial>(
    rng: &mut SeededRng,
    p: &WordParams,
    mono: impl Fn(&mut SeededRng, &WordParams) -> M,
) -> Word<M> {
    let len = rng.gen_range(0..=p.max_letters);
    let letters: Vec<(M, Sign)> = (0..len).map(|_| (mono(rng, p), sign(rng))).collect();
    Word::from_letters(letters)
}

/// A word on the commutative alphabet, freely reduced (so possibly shorter
/// than the drawn length).
pub fn word(rng: &mut SeededRng, p: &WordParams) -> Word<CMono> {
    word_with(rng, p, cmono)
}

pub fn nc_word(rng: &mut SeededRng, p: &WordParams) -> Word<NCMono> {
    word_with(rng, p, ncmono)
}

/// A generator `m⁻¹ ⋆ (m∘l) ⋆ l⁻¹` of `N`, conjugated by a random word.
pub fn n_generator(rng: &mut SeededRng, p: &WordParams) -> Word<CMono> {
    let (m, l) = (cmono(rng, p), cmono(rng, p));
    let core = Word::from_letters([(m.clone(), Sign::Minus), (m.circ(&l), Sign::Plus), (l, Sign::Minus)]);
    let g = word(rng, &WordParams { max_letters: 3, ..*p });
    g.inv().mul(&core).mul(&g)
}

/// A product of one to three conjugated generators of `N`.
pub fn n_element(rng: &mut SeededRng, p: &WordParams) -> Word<CMono> {
    let k = rng.gen_range(1..=3);
    (0..k).fold(Word::empty(), |acc, _| {
        let g = n_generator(rng, p);
        if rng.gen_bool(0.5) {
            acc.mul(&g)
        } else {
            acc.mul(&g.inv())
        }
    })
}

/// `n₁ n₂ n₁⁻¹ n₂⁻¹` for random `N`-elements, i.e. an element of `[N, N]`.
pub fn n_commutator(rng: &mut SeededRng, p: &WordParams) -> Word<CMono> {
    let (a, b) = (n_element(rng, p), n_element(rng, p));
    a.mul(&b).mul(&a.inv()).mul(&b.inv())
}

pub fn group_elt(rng: &mut SeededRng, generators_used: usize) -> GroupElt {
    GroupElt::from_exponents(
        generators(generators_used)
            .into_iter()
            .map(|x| (x, rng.gen_range(-2..=2i64))),
    )
}

/// A nonzero group-ring element.
pub fn group_ring_elt(rng: &mut SeededRng, generators_used: usize) -> GroupRingElt {
    loop {
        let terms = rng.gen_range(1..=4);
        let f = GroupRingElt::from_terms(
            (0..terms).map(|_| (BigInt::from(rng.gen_range(-3..=3i64)), group_elt(rng, generators_used))),
        );
        if !f.is_empty() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_reproduce() {
        let p = ExprParams::default();
        let a: Vec<Expr> = {
            let mut r = rng(5);
            (0..20).map(|_| expr(&mut r, &p)).collect()
        };
        let b: Vec<Expr> = {
            let mut r = rng(5);
            (0..20).map(|_| expr(&mut r, &p)).collect()
        };
        assert_eq!(a, b);
    }

    #[test]
    fn respects_bounds() {
        let mut r = rng(1);
        let p = ExprParams::default();
        let wp = WordParams::default();
        for _ in 0..200 {
            assert!(expr(&mut r, &p).depth() <= 5);
            let w = word(&mut r, &wp);
            assert!(w.len() <= 6);
            assert!(w.letters().iter().all(|(m, _)| (1..=3).contains(&m.degree())));
            assert!(!group_ring_elt(&mut r, 3).is_empty());
        }
    }

    #[test]
    fn n_elements_project_trivially() {
        let mut r = rng(2);
        for _ in 0..50 {
            assert!(n_element(&mut r, &WordParams::default()).project().is_identity());
        }
    }
}
