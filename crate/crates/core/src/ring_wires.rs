//! Right wires built from a unital ring and two commuting monoid
//! endomorphisms `p`, `π`:
//!
//! ```text
//! u ⋆ v      = π(v)u − p(u)π(v) + p(u)v
//! inv_⋆(u)   = π(u)⁻¹ − p(u)⁻¹π(u)⁻¹u + p(u)⁻¹
//! ```
//!
//! on the carrier `U = p⁻¹(G) ∩ π⁻¹(H)`. Everything here is finite: rings of
//! upper-triangular matrices over `ℤ/m`, verified by exhaustive (or seeded
//! sampled) sweeps.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};

/// Largest ring the enumerator accepts.
pub const MAX_RING_SIZE: usize = 100_000;

/// Sweeps over more tuples than this fall back to sampling in [`Sweep::Auto`].
pub const AUTO_EXHAUSTIVE_LIMIT: usize = 1_000_000;

/// Upper-triangular `n×n` matrix over `ℤ/m`, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.entries.chunks(self.n).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, a) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The ring of upper-triangular `n×n` matrices over `ℤ/m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FiniteRing {
    pub n: usize,
    pub modulus: u32,
}

impl FiniteRing {
    pub fn new(n: usize, modulus: u32) -> Result<Self> {
        if n == 0 || modulus < 2 {
            return Err(Error::InvalidRing(format!(
                "need n >= 1 and m >= 2, got n={n}, m={modulus}"
            )));
        }
        let free = n * (n + 1) / 2;
        let size = (modulus as f64).powi(free as i32);
        if size > MAX_RING_SIZE as f64 {
            return Err(Error::InvalidRing(format!(
                "{modulus}^{free} elements exceeds the enumeration limit {MAX_RING_SIZE}"
            )));
        }
        Ok(FiniteRing { n, modulus })
    }

    pub fn size(&self) -> usize {
        (self.modulus as usize).pow((self.n * (self.n + 1) / 2) as u32)
    }

    /// Builds a matrix from rows, reducing mod `m`; entries below the
    /// diagonal must be zero.
    pub fn matrix(&self, rows: &[&[i64]]) -> Result<Matrix> {
        if rows.len() != self.n || rows.iter().any(|r| r.len() != self.n) {
            return Err(Error::InvalidRing(format!("expected a {0}x{0} matrix", self.n)));
        }
        let m = i64::from(self.modulus);
        let mut entries = Vec::with_capacity(self.n * self.n);
        for (i, row) in rows.iter().enumerate() {
            for (j, a) in row.iter().enumerate() {
                let a = a.rem_euclid(m) as u32;
                if j < i && a != 0 {
                    return Err(Error::InvalidRing("matrix is not upper triangular".into()));
                }
                entries.push(a);
            }
        }
        Ok(Matrix { n: self.n, entries })
    }

    pub fn zero(&self) -> Matrix {
        Matrix {
            n: self.n,
            entries: vec![0; self.n * self.n],
        }
    }

    pub fn one(&self) -> Matrix {
        self.diag(&vec![1; self.n])
    }

    pub fn diag(&self, d: &[u32]) -> Matrix {
        let mut out = self.zero();
        for (i, a) in d.iter().enumerate() {
            out.entries[i * self.n + i] = a % self.modulus;
        }
        out
    }

    pub fn add(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let m = self.modulus;
        Matrix {
            n: self.n,
            entries: a.entries.iter().zip(&b.entries).map(|(x, y)| (x + y) % m).collect(),
        }
    }

    pub fn neg(&self, a: &Matrix) -> Matrix {
        let m = self.modulus;
        Matrix {
            n: self.n,
            entries: a.entries.iter().map(|x| (m - x) % m).collect(),
        }
    }

    pub fn sub(&self, a: &Matrix, b: &Matrix) -> Matrix {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let (n, m) = (self.n, u64::from(self.modulus));
        let mut out = self.zero();
        for i in 0..n {
            for j in i..n {
                let mut acc = 0u64;
                for k in i..=j {
                    acc += u64::from(a.entry(i, k)) * u64::from(b.entry(k, j));
                }
                out.entries[i * n + j] = (acc % m) as u32;
            }
        }
        out
    }

    fn inv_mod(&self, a: u32) -> Option<u32> {
        (1..self.modulus).find(|b| (u64::from(a) * u64::from(*b)) % u64::from(self.modulus) == 1)
    }

    pub fn is_unit(&self, a: &Matrix) -> bool {
        (0..self.n).all(|i| self.inv_mod(a.entry(i, i)).is_some())
    }

    /// Inverse by back substitution; `None` when a diagonal entry is not a unit mod `m`.
    #[allow(clippy::needless_range_loop)]
    pub fn inverse(&self, a: &Matrix) -> Option<Matrix> {
        let (n, m) = (self.n, u64::from(self.modulus));
        let diag_inv: Vec<u32> = (0..n).map(|i| self.inv_mod(a.entry(i, i))).collect::<Option<_>>()?;
        let mut x = self.zero();
        for (i, d) in diag_inv.iter().enumerate() {
            x.entries[i * n + i] = *d;
        }
        for d in 1..n {
            for i in 0..n - d {
                let j = i + d;
                let mut acc = 0u64;
                for k in i + 1..=j {
                    acc += u64::from(a.entry(i, k)) * u64::from(x.entry(k, j));
                }
                let acc = (acc % m) as u32;
                let v = (u64::from(diag_inv[i]) * u64::from((self.modulus - acc) % self.modulus)) % m;
                x.entries[i * n + j] = v as u32;
            }
        }
        Some(x)
    }

    pub fn elements(&self) -> Vec<Matrix> {
        let n = self.n;
        let slots: Vec<usize> = (0..n).flat_map(|i| (i..n).map(move |j| i * n + j)).collect();
        let mut out = Vec::with_capacity(self.size());
        let mut digits = vec![0u32; slots.len()];
        loop {
            let mut entries = vec![0u32; n * n];
            for (s, d) in slots.iter().zip(&digits) {
                entries[*s] = *d;
            }
            out.push(Matrix { n, entries });
            let mut k = 0;
            loop {
                if k == digits.len() {
                    return out;
                }
                digits[k] += 1;
                if digits[k] < self.modulus {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
        }
    }

    pub fn units(&self) -> Vec<Matrix> {
        self.elements().into_iter().filter(|a| self.is_unit(a)).collect()
    }
}

type EndoFn = Arc<dyn Fn(&FiniteRing, &Matrix) -> Matrix + Send + Sync>;

/// A map on the ring, intended to be a monoid endomorphism of `(A, ·)`.
#[derive(Clone)]
pub enum Endo {
    /// Every element goes to `1`.
    Trivial,
    Identity,
    /// Keeps the diagonal entries indexed (1-based) by `E`, sets the other
    /// diagonal entries to 1 and drops everything off the diagonal.
    IndicatorDiag(BTreeSet<usize>),
    Custom {
        name: String,
        map: EndoFn,
    },
}

impl Endo {
    pub fn custom(name: &str, map: impl Fn(&FiniteRing, &Matrix) -> Matrix + Send + Sync + 'static) -> Self {
        Endo::Custom {
            name: name.to_string(),
            map: Arc::new(map),
        }
    }

    pub fn apply(&self, ring: &FiniteRing, a: &Matrix) -> Matrix {
        match self {
            Endo::Trivial => ring.one(),
            Endo::Identity => a.clone(),
            Endo::IndicatorDiag(e) => {
                let d: Vec<u32> = (0..ring.n)
                    .map(|i| if e.contains(&(i + 1)) { a.entry(i, i) } else { 1 })
                    .collect();
                ring.diag(&d)
            }
            Endo::Custom { map, .. } => map(ring, a),
        }
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endo::Trivial => f.write_str("trivial"),
            Endo::Identity => f.write_str("identity"),
            Endo::IndicatorDiag(e) => write!(f, "indicator_diag{e:?}"),
            Endo::Custom { name, .. } => write!(f, "custom({name})"),
        }
    }
}

/// The pair `(p, π)`.
#[derive(Clone, Debug)]
pub struct EndoSpec {
    pub p: Endo,
    pub pi: Endo,
}

impl EndoSpec {
    pub fn new(p: Endo, pi: Endo) -> Self {
        EndoSpec { p, pi }
    }

    /// `u ⋆ v = π(v)u − p(u)π(v) + p(u)v`, defined on the whole ring.
    pub fn star(&self, ring: &FiniteRing, u: &Matrix, v: &Matrix) -> Matrix {
        let pu = self.p.apply(ring, u);
        let piv = self.pi.apply(ring, v);
        let a = ring.mul(&piv, u);
        let b = ring.mul(&pu, &piv);
        let c = ring.mul(&pu, v);
        ring.add(&ring.sub(&a, &b), &c)
    }
}

/// A finite subgroup of the unit group, given by its elements.
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: HashSet<Matrix>,
}

impl Subgroup {
    /// Validates that `elements` is a subgroup of the units of `ring`.
    pub fn new(ring: &FiniteRing, elements: impl IntoIterator<Item = Matrix>) -> Result<Self> {
        let elements: HashSet<Matrix> = elements.into_iter().collect();
        let bad = |why: String| Err(Error::InvalidRing(format!("not a subgroup: {why}")));
        if !elements.contains(&ring.one()) {
            return bad("missing the identity".into());
        }
        for a in &elements {
            let Some(inv) = ring.inverse(a) else {
                return bad(format!("{a} is not a unit"));
            };
            if !elements.contains(&inv) {
                return bad(format!("not closed under inverse at {a}"));
            }
            for b in &elements {
                if !elements.contains(&ring.mul(a, b)) {
                    return bad(format!("not closed under product at {a}, {b}"));
                }
            }
        }
        Ok(Subgroup { elements })
    }

    pub fn trivial(ring: &FiniteRing) -> Self {
        Subgroup {
            elements: HashSet::from([ring.one()]),
        }
    }

    pub fn units(ring: &FiniteRing) -> Self {
        Subgroup {
            elements: ring.units().into_iter().collect(),
        }
    }

    pub fn contains(&self, a: &Matrix) -> bool {
        self.elements.contains(a)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// `U = p⁻¹(G) ∩ π⁻¹(H)`, in enumeration order.
pub fn carrier(ring: &FiniteRing, spec: &EndoSpec, g: &Subgroup, h: &Subgroup) -> Vec<Matrix> {
    ring.elements()
        .into_iter()
        .filter(|u| g.contains(&spec.p.apply(ring, u)) && h.contains(&spec.pi.apply(ring, u)))
        .collect()
}

/// How many tuples a check visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sweep {
    Exhaustive,
    Sampled {
        samples: usize,
        seed: u64,
    },
    /// Exhaustive up to [`AUTO_EXHAUSTIVE_LIMIT`] tuples, sampled beyond.
    Auto {
        samples: usize,
        seed: u64,
    },
}

impl Sweep {
    /// Visits `arity`-tuples over `set`, stopping early when `f` returns `false`.
    fn for_each<T>(&self, set: &[T], arity: usize, mut f: impl FnMut(&[&T]) -> bool) {
        if set.is_empty() {
            return;
        }
        let total = set.len().checked_pow(arity as u32).unwrap_or(usize::MAX);
        let sampled = match *self {
            Sweep::Exhaustive => None,
            Sweep::Sampled { samples, seed } => Some((samples, seed)),
            Sweep::Auto { samples, seed } => (total > AUTO_EXHAUSTIVE_LIMIT).then_some((samples, seed)),
        };
        let mut tuple: Vec<&T> = Vec::with_capacity(arity);
        match sampled {
            Some((samples, seed)) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..samples {
                    tuple.clear();
                    tuple.extend((0..arity).map(|_| &set[rng.gen_range(0..set.len())]));
                    if !f(&tuple) {
                        return;
                    }
                }
            }
            None => {
                let mut idx = vec![0usize; arity];
                loop {
                    tuple.clear();
                    tuple.extend(idx.iter().map(|i| &set[*i]));
                    if !f(&tuple) {
                        return;
                    }
                    let mut k = 0;
                    loop {
                        if k == arity {
                            return;
                        }
                        idx[k] += 1;
                        if idx[k] < set.len() {
                            break;
                        }
                        idx[k] = 0;
                        k += 1;
                    }
                }
            }
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Sweep::Exhaustive => "exhaustive".into(),
            Sweep::Sampled { samples, seed } => format!("sampled ({samples} samples, seed {seed})"),
            Sweep::Auto { samples, seed } => {
                format!("auto (exhaustive up to {AUTO_EXHAUSTIVE_LIMIT} tuples, else {samples} samples, seed {seed})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionResult {
    pub condition: String,
    pub status: Status,
    pub witness: Vec<String>,
    /// Outcome is recorded but does not count towards [`Report::passed`].
    #[serde(skip)]
    pub informational: bool,
    #[serde(skip)]
    pub checked: usize,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub entries: Vec<ConditionResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.informational || e.status == Status::Pass)
    }

    pub fn get(&self, condition: &str) -> Option<&ConditionResult> {
        self.entries.iter().find(|e| e.condition == condition)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionResult> {
        self.entries
            .iter()
            .filter(|e| !e.informational && e.status == Status::Fail)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(&self.entries).unwrap_or(Value::Null)
    }

    pub fn to_table(&self) -> String {
        let width = self.entries.iter().map(|e| e.condition.len()).max().unwrap_or(9).max(9);
        let mut out = format!("{:<width$}  {:<6}  {:>8}  witness\n", "condition", "status", "checked");
        for e in &self.entries {
            let status = match (e.status, e.informational) {
                (Status::Pass, false) => "pass",
                (Status::Pass, true) => "pass*",
                (Status::Fail, false) => "FAIL",
                (Status::Fail, true) => "fail*",
            };
            out.push_str(&format!(
                "{:<width$}  {:<6}  {:>8}  {}\n",
                e.condition,
                status,
                e.checked,
                e.witness.join(" ")
            ));
        }
        if self.entries.iter().any(|e| e.informational) {
            out.push_str("(* informational, not required of a right wire)\n");
        }
        out
    }
}

/// Records up to `limit` witnesses per condition.
struct Check {
    name: String,
    witness: Vec<String>,
    failures: usize,
    checked: usize,
    limit: usize,
    informational: bool,
}

impl Check {
    fn new(name: &str, limit: usize) -> Self {
        Check {
            name: name.to_string(),
            witness: Vec::new(),
            failures: 0,
            checked: 0,
            limit,
            informational: false,
        }
    }

    fn informational(mut self) -> Self {
        self.informational = true;
        self
    }

    /// Returns whether the sweep should continue.
    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) -> bool {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.witness.len() < self.limit {
                self.witness.push(witness());
            }
        }
        self.witness.len() < self.limit
    }

    fn finish(self) -> ConditionResult {
        ConditionResult {
            condition: self.name,
            status: if self.failures == 0 { Status::Pass } else { Status::Fail },
            witness: self.witness,
            informational: self.informational,
            checked: self.checked,
        }
    }
}

/// Every failing element is listed.
const LIST_ALL: usize = usize::MAX;

/// Checks the hypotheses on `(p, π, G, H)`: unit fixing, multiplicativity,
/// commutation of `p(u)` with `π(v)`, the compatibility identities
/// `p(u⋆v) = p(u)p(v)` and `π(u⋆v) = π(v)π(u)` over the whole ring, and
/// `p(inv_⋆ u) = p(u)⁻¹`, `π(inv_⋆ u) = π(u)⁻¹` over the carrier.
pub fn check_conditions(ring: &FiniteRing, spec: &EndoSpec, g: &Subgroup, h: &Subgroup, sweep: Sweep) -> Report {
    let elems = ring.elements();
    let one = ring.one();
    let p = |a: &Matrix| spec.p.apply(ring, a);
    let pi = |a: &Matrix| spec.pi.apply(ring, a);
    let mut report = Report::default();

    for (name, endo) in [("p_fixes_unit", &spec.p), ("pi_fixes_unit", &spec.pi)] {
        let mut c = Check::new(name, LIST_ALL);
        let image = endo.apply(ring, &one);
        c.record(image == one, || format!("1->{image}"));
        report.entries.push(c.finish());
    }

    for (name, endo) in [("p_multiplicative", &spec.p), ("pi_multiplicative", &spec.pi)] {
        let mut c = Check::new(name, LIST_ALL);
        sweep.for_each(&elems, 2, |t| {
            let lhs = endo.apply(ring, &ring.mul(t[0], t[1]));
            let rhs = ring.mul(&endo.apply(ring, t[0]), &endo.apply(ring, t[1]));
            c.record(lhs == rhs, || format!("(u={}, v={})", t[0], t[1]))
        });
        report.entries.push(c.finish());
    }

    let mut c = Check::new("p_pi_commute", LIST_ALL);
    sweep.for_each(&elems, 2, |t| {
        let (pu, piv) = (p(t[0]), pi(t[1]));
        c.record(ring.mul(&pu, &piv) == ring.mul(&piv, &pu), || {
            format!("(u={}, v={})", t[0], t[1])
        })
    });
    report.entries.push(c.finish());

    let mut cp = Check::new("p_star_morphism", LIST_ALL);
    let mut cpi = Check::new("pi_star_antimorphism", LIST_ALL);
    sweep.for_each(&elems, 2, |t| {
        let s = spec.star(ring, t[0], t[1]);
        let a = cp.record(p(&s) == ring.mul(&p(t[0]), &p(t[1])), || {
            format!("(u={}, v={})", t[0], t[1])
        });
        let b = cpi.record(pi(&s) == ring.mul(&pi(t[1]), &pi(t[0])), || {
            format!("(u={}, v={})", t[0], t[1])
        });
        a || b
    });
    report.entries.push(cp.finish());
    report.entries.push(cpi.finish());

    let u_set = carrier(ring, spec, g, h);
    let mut cp = Check::new("p_inverse", LIST_ALL);
    let mut cpi = Check::new("pi_inverse", LIST_ALL);
    for u in &u_set {
        let (pu, piu) = (p(u), pi(u));
        match (ring.inverse(&pu), ring.inverse(&piu)) {
            (Some(pu_inv), Some(piu_inv)) => {
                let v = inv_star_raw(ring, u, &pu_inv, &piu_inv);
                cp.record(p(&v) == pu_inv, || format!("(u={u})"));
                cpi.record(pi(&v) == piu_inv, || format!("(u={u})"));
            }
            _ => {
                cp.record(false, || format!("(u={u}, p(u) or pi(u) not invertible)"));
            }
        }
    }
    report.entries.push(cp.finish());
    report.entries.push(cpi.finish());
    report
}

fn inv_star_raw(ring: &FiniteRing, u: &Matrix, pu_inv: &Matrix, piu_inv: &Matrix) -> Matrix {
    let mid = ring.mul(&ring.mul(pu_inv, piu_inv), u);
    ring.add(&ring.sub(piu_inv, &mid), pu_inv)
}

/// `(U, ⋆, ·)` for a concrete ring, endomorphism pair and subgroups.
#[derive(Clone, Debug)]
pub struct WireInstance {
    pub ring: FiniteRing,
    pub spec: EndoSpec,
    pub g: Subgroup,
    pub h: Subgroup,
    pub carrier: Vec<Matrix>,
}

impl WireInstance {
    pub fn new(ring: FiniteRing, spec: EndoSpec, g: Subgroup, h: Subgroup) -> Self {
        let carrier = carrier(&ring, &spec, &g, &h);
        WireInstance {
            ring,
            spec,
            g,
            h,
            carrier,
        }
    }

    pub fn contains(&self, u: &Matrix) -> bool {
        self.g.contains(&self.spec.p.apply(&self.ring, u)) && self.h.contains(&self.spec.pi.apply(&self.ring, u))
    }

    pub fn star(&self, u: &Matrix, v: &Matrix) -> Matrix {
        self.spec.star(&self.ring, u, v)
    }

    pub fn circ(&self, u: &Matrix, v: &Matrix) -> Matrix {
        self.ring.mul(u, v)
    }

    /// `inv_⋆(u) = π(u)⁻¹ − p(u)⁻¹π(u)⁻¹u + p(u)⁻¹`
    pub fn inv_star(&self, u: &Matrix) -> Result<Matrix> {
        let pu = self.spec.p.apply(&self.ring, u);
        let piu = self.spec.pi.apply(&self.ring, u);
        if !self.g.contains(&pu) || !self.h.contains(&piu) {
            return Err(Error::NotInvertible(format!("{u}: p(u)={pu}, pi(u)={piu}")));
        }
        let (Some(pu_inv), Some(piu_inv)) = (self.ring.inverse(&pu), self.ring.inverse(&piu)) else {
            return Err(Error::NotInvertible(format!("{u}")));
        };
        Ok(inv_star_raw(&self.ring, u, &pu_inv, &piu_inv))
    }

    /// Right-wire axioms over the carrier, plus left distributivity as an
    /// informational entry. Each failing condition carries its first
    /// counterexample.
    pub fn verify(&self, sweep: Sweep) -> Report {
        let u_set = &self.carrier;
        let one = self.ring.one();
        let inv = |u: &Matrix| self.inv_star(u).ok();
        let mut report = Report::default();
        let first = 1;

        let mut c = Check::new("carrier_nonempty", first);
        c.record(!u_set.is_empty(), || "U is empty".into());
        report.entries.push(c.finish());

        let mut star_cl = Check::new("star_closure", first);
        let mut circ_cl = Check::new("circ_closure", first);
        sweep.for_each(u_set, 2, |t| {
            let a = star_cl.record(self.contains(&self.star(t[0], t[1])), || {
                format!("(u={}, v={})", t[0], t[1])
            });
            let b = circ_cl.record(self.contains(&self.circ(t[0], t[1])), || {
                format!("(u={}, v={})", t[0], t[1])
            });
            a || b
        });
        report.entries.push(star_cl.finish());
        report.entries.push(circ_cl.finish());

        let mut inv_cl = Check::new("inverse_closure", first);
        let mut inverse = Check::new("star_inverse", first);
        let mut neutral = Check::new("star_neutral", first);
        let mut circ_neutral = Check::new("circ_neutral", first);
        neutral.record(self.contains(&one), || "1 not in U".into());
        for u in u_set {
            let v = inv(u);
            inv_cl.record(v.as_ref().is_some_and(|v| self.contains(v)), || format!("(u={u})"));
            inverse.record(
                v.as_ref()
                    .is_some_and(|v| self.star(u, v) == one && self.star(v, u) == one),
                || format!("(u={u})"),
            );
            neutral.record(self.star(u, &one) == *u && self.star(&one, u) == *u, || {
                format!("(u={u})")
            });
            circ_neutral.record(self.circ(u, &one) == *u && self.circ(&one, u) == *u, || {
                format!("(u={u})")
            });
        }
        report.entries.push(inv_cl.finish());
        report.entries.push(neutral.finish());
        report.entries.push(inverse.finish());
        report.entries.push(circ_neutral.finish());

        let mut star_assoc = Check::new("star_associativity", first);
        let mut circ_assoc = Check::new("circ_associativity", first);
        let mut right = Check::new("right_distributivity", first);
        let mut left = Check::new("left_distributivity", first).informational();
        sweep.for_each(u_set, 3, |t| {
            let (u, v, w) = (t[0], t[1], t[2]);
            let witness = || format!("(u={u}, v={v}, w={w})");
            let a = star_assoc.record(
                self.star(u, &self.star(v, w)) == self.star(&self.star(u, v), w),
                witness,
            );
            let b = circ_assoc.record(
                self.circ(u, &self.circ(v, w)) == self.circ(&self.circ(u, v), w),
                witness,
            );
            // (v ⋆ w)·u = v·u ⋆ inv(u) ⋆ w·u
            let right_ok = inv(u).is_some_and(|ui| {
                self.circ(&self.star(v, w), u) == self.star(&self.star(&self.circ(v, u), &ui), &self.circ(w, u))
            });
            let c = right.record(right_ok, witness);
            // u·(v ⋆ w) = u·v ⋆ inv(u) ⋆ u·w
            let left_ok = inv(u).is_some_and(|ui| {
                self.circ(u, &self.star(v, w)) == self.star(&self.star(&self.circ(u, v), &ui), &self.circ(u, w))
            });
            left.record(left_ok, witness);
            a || b || c
        });
        report.entries.push(star_assoc.finish());
        report.entries.push(circ_assoc.finish());
        report.entries.push(right.finish());
        report.entries.push(left.finish());
        report
    }
}

/// Names accepted by [`builtin`].
pub const BUILTINS: [&str; 3] = ["indicator_diag", "trivial_both", "identity_p_trivial_pi"];

/// Built-in `(ring, (p, π))` pairs. `e` holds the 1-based diagonal indices
/// used by `indicator_diag`.
pub fn builtin(name: &str, n: usize, modulus: u32, e: &[usize]) -> Result<(FiniteRing, EndoSpec)> {
    let ring = FiniteRing::new(n, modulus)?;
    let spec = match name {
        "indicator_diag" => {
            if let Some(bad) = e.iter().find(|i| **i == 0 || **i > n) {
                return Err(Error::InvalidRing(format!("index {bad} outside 1..={n}")));
            }
            EndoSpec::new(Endo::IndicatorDiag(e.iter().copied().collect()), Endo::Trivial)
        }
        "trivial_both" => EndoSpec::new(Endo::Trivial, Endo::Trivial),
        "identity_p_trivial_pi" => EndoSpec::new(Endo::Identity, Endo::Trivial),
        other => return Err(Error::UnknownExample(other.to_string())),
    };
    Ok((ring, spec))
}
