//! Seeded property suites over every model.
//!
//! Inputs for a run are drawn up front from one seeded generator, then checked
//! in parallel chunks; outcomes are merged in input order, so a seed always
//! yields the same report, including the first counterexample.

use std::fmt::Write as _;
use std::thread;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;
use serde_json::Value;

use crate::brace_fractions::Fraction;
use crate::canonical_wire::BracePoly;
use crate::error::{Error, Result};
use crate::expr::{Expr, FracExpr};
use crate::group_algebra::{gen, GroupRingElt};
use crate::poly::{IntPoly, TMono};
use crate::radical_model::RadicalPoly;
use crate::ring_wires::{self, check_conditions, FiniteRing, Subgroup, Sweep, WireInstance, BUILTINS};
use crate::sampling::{self, ExprParams, SeededRng, WordParams};
use crate::word_model::{CMono, Monomial, Word};

pub const SUITES: [&str; 5] = ["wire", "fractions", "fox", "radical", "ringwire"];

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PropertyOutcome {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub counterexample: Option<String>,
}

impl PropertyOutcome {
    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub samples: usize,
    pub properties: Vec<PropertyOutcome>,
}

impl SuiteReport {
    fn new(suite: &str, seed: u64, samples: usize) -> Self {
        SuiteReport {
            suite: suite.into(),
            seed,
            samples,
            properties: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.properties.iter().all(PropertyOutcome::passed)
    }

    pub fn get(&self, name: &str) -> Option<&PropertyOutcome> {
        self.properties.iter().find(|p| p.name == name)
    }

    pub fn pass_count(&self) -> usize {
        self.properties.iter().filter(|p| p.passed()).count()
    }

    pub fn fail_count(&self) -> usize {
        self.properties.len() - self.pass_count()
    }

    pub fn first_counterexample(&self) -> Option<(&str, &str)> {
        self.properties
            .iter()
            .find_map(|p| p.counterexample.as_deref().map(|c| (p.name.as_str(), c)))
    }

    fn absorb(&mut self, tally: Tally) {
        for p in tally.props {
            match self.properties.iter_mut().find(|q| q.name == p.name) {
                Some(q) => {
                    q.checked += p.checked;
                    q.failed += p.failed;
                    if q.counterexample.is_none() {
                        q.counterexample = p.counterexample;
                    }
                }
                None => self.properties.push(p),
            }
        }
    }

    pub fn to_text(&self) -> String {
        let width = self.properties.iter().map(|p| p.name.len()).max().unwrap_or(8).max(8);
        let mut out = format!("suite {}  seed {}  samples {}\n", self.suite, self.seed, self.samples);
        let _ = writeln!(out, "{:<width$}  {:>8}  {:>6}  status", "property", "checked", "failed");
        for p in &self.properties {
            let status = if p.passed() { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{:<width$}  {:>8}  {:>6}  {status}", p.name, p.checked, p.failed);
        }
        let _ = writeln!(out, "passed {}, failed {}", self.pass_count(), self.fail_count());
        match self.first_counterexample() {
            Some((name, c)) => {
                let _ = writeln!(out, "first counterexample ({name}): {c}");
            }
            None => out.push_str("first counterexample: none\n"),
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).unwrap_or(Value::Null);
        v["passed"] = Value::from(self.pass_count());
        v["failed"] = Value::from(self.fail_count());
        v
    }
}

/// Per-chunk outcome accumulator, keyed by property name in first-seen order.
#[derive(Default)]
pub struct Tally {
    props: Vec<PropertyOutcome>,
}

impl Tally {
    pub fn record(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> String) -> bool {
        let idx = match self.props.iter().position(|p| p.name == name) {
            Some(i) => i,
            None => {
                self.props.push(PropertyOutcome {
                    name: name.into(),
                    checked: 0,
                    failed: 0,
                    counterexample: None,
                });
                self.props.len() - 1
            }
        };
        let p = &mut self.props[idx];
        p.checked += 1;
        if !ok {
            p.failed += 1;
            if p.counterexample.is_none() {
                p.counterexample = Some(witness());
            }
        }
        ok
    }
}

/// Runs `check` on every input, in parallel chunks, merging in input order.
fn sweep<T: Sync>(report: &mut SuiteReport, inputs: &[T], check: impl Fn(&T, &mut Tally) + Sync) {
    if inputs.is_empty() {
        return;
    }
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(inputs.len());
    let chunk = inputs.len().div_ceil(workers);
    let check = &check;
    let tallies: Vec<Tally> = thread::scope(|s| {
        let handles: Vec<_> = inputs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    let mut t = Tally::default();
                    for x in part {
                        check(x, &mut t);
                    }
                    t
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("property check panicked"))
            .collect()
    });
    for t in tallies {
        report.absorb(t);
    }
}

fn draw<T>(rng: &mut SeededRng, n: usize, mut f: impl FnMut(&mut SeededRng) -> T) -> Vec<T> {
    (0..n).map(|_| f(rng)).collect()
}

/// Runs a named suite.
pub fn run(suite: &str, samples: usize, seed: u64) -> Result<SuiteReport> {
    match suite {
        "wire" => Ok(wire(samples, seed)),
        "fractions" => Ok(fractions(samples, seed)),
        "fox" => Ok(fox(samples, seed)),
        "radical" => Ok(radical(samples, seed)),
        "ringwire" => Ok(ringwire(samples, seed)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

fn show3(a: &Expr, b: &Expr, c: &Expr) -> String {
    format!("a = {a}; b = {b}; c = {c}")
}

/// Wire axioms, the word-model oracle, `dot` commutation and cancellativity.
pub fn wire(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("wire", seed, samples);
    let mut rng = sampling::rng(seed);
    wire_axioms_into(&mut report, &mut rng, samples);
    dot_commute_into(&mut report, &mut rng, samples);
    cancellativity_into(&mut report, &mut rng, samples, samples);
    report
}

/// `⋆`-group, `∘`-commutative-monoid and both distributivities on random
/// triples of expressions, plus `embed ∘ eval_word = eval_canonical`.
pub fn wire_axioms(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("wire", seed, samples);
    wire_axioms_into(&mut report, &mut sampling::rng(seed), samples);
    report
}

fn wire_axioms_into(report: &mut SuiteReport, rng: &mut SeededRng, samples: usize) {
    let p = ExprParams::default();
    let triples = draw(rng, samples, |r| {
        (sampling::expr(r, &p), sampling::expr(r, &p), sampling::expr(r, &p))
    });
    sweep(report, &triples, |(a, b, c), t| {
        let w = || show3(a, b, c);
        let (u, v, x) = (a.eval_canonical(), b.eval_canonical(), c.eval_canonical());
        let e = BracePoly::identity();
        t.record(
            "membership",
            [&u, &v, &x].iter().all(|f| BracePoly::new(f.poly().clone()).is_ok()),
            w,
        );
        t.record("star_associativity", u.star(&v.star(&x)) == u.star(&v).star(&x), w);
        t.record("star_identity", u.star(&e) == u && e.star(&u) == u, w);
        let ui = u.star_inv();
        t.record(
            "star_inverse",
            u.star(&ui).is_identity() && ui.star(&u).is_identity(),
            w,
        );
        t.record("circ_associativity", u.circ(&v.circ(&x)) == u.circ(&v).circ(&x), w);
        t.record("circ_commutativity", u.circ(&v) == v.circ(&u), w);
        t.record("circ_identity", u.circ(&e) == u && e.circ(&u) == u, w);
        t.record(
            "left_distributivity",
            u.circ(&v.star(&x)) == u.circ(&v).star(&ui).star(&u.circ(&x)),
            w,
        );
        t.record(
            "right_distributivity",
            v.star(&x).circ(&u) == v.circ(&u).star(&ui).star(&x.circ(&u)),
            w,
        );
        t.record("word_oracle", a.eval_word::<CMono>().embed() == u, || {
            format!("e = {a}")
        });
    });
}

/// `dot(a, b)` and `dot(c, d)` commute under `⋆`.
pub fn dot_commute(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("wire", seed, samples);
    dot_commute_into(&mut report, &mut sampling::rng(seed), samples);
    report
}

fn dot_commute_into(report: &mut SuiteReport, rng: &mut SeededRng, samples: usize) {
    let p = ExprParams::default();
    let quads = draw(rng, samples, |r| [(); 4].map(|_| sampling::expr(r, &p)));
    sweep(report, &quads, |q, t| {
        let [a, b, c, d] = q.each_ref().map(Expr::eval_canonical);
        let (d1, d2) = (a.dot(&b), c.dot(&d));
        t.record("dot_commute", d1.star(&d2) == d2.star(&d1), || {
            format!("a = {}; b = {}; c = {}; d = {}", q[0], q[1], q[2], q[3])
        });
    });
}

/// Multiplicativity of initial terms in the group ring (`pairs` samples) and
/// `∘`-cancellation in the canonical wire (`triples` samples).
pub fn cancellativity(pairs: usize, triples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("wire", seed, pairs.max(triples));
    cancellativity_into(&mut report, &mut sampling::rng(seed), pairs, triples);
    report
}

fn cancellativity_into(report: &mut SuiteReport, rng: &mut SeededRng, pairs: usize, triples: usize) {
    let pairs = draw(rng, pairs, |r| {
        (sampling::group_ring_elt(r, 3), sampling::group_ring_elt(r, 3))
    });
    sweep(report, &pairs, |(f, g), t| {
        let ok = match ((f * g).initial(), f.initial(), g.initial()) {
            (Ok(fg), Ok(a), Ok(b)) => *fg == a * b,
            _ => false,
        };
        t.record("initial_multiplicative", ok, || format!("f = {f}; g = {g}"));
    });
    let p = ExprParams::default();
    let triples = draw(rng, triples, |r| loop {
        let (a, b, c) = (sampling::expr(r, &p), sampling::expr(r, &p), sampling::expr(r, &p));
        let (v, x) = (b.eval_canonical(), c.eval_canonical());
        if v != x {
            return (a, b, c, v, x);
        }
    });
    sweep(report, &triples, |(a, b, c, v, x), t| {
        let u = a.eval_canonical();
        t.record("circ_cancellative", u.circ(v) != u.circ(x), || show3(a, b, c));
    });
}

/// Fraction skew brace over the canonical wire.
pub fn fractions(samples: usize, seed: u64) -> SuiteReport {
    type F = Fraction<BracePoly>;
    let mut report = SuiteReport::new("fractions", seed, samples);
    let mut rng = sampling::rng(seed);
    let num = ExprParams::default().with_depth(3);
    let den = ExprParams::default().with_depth(2);
    // a, b, c plus two wire elements used to build equivalent copies of a
    let inputs = draw(&mut rng, samples, |r| {
        (
            [(); 3].map(|_| sampling::frac_expr(r, &num, &den)),
            (sampling::expr(r, &den), sampling::expr(r, &den)),
        )
    });
    let regression = FracExpr::frac(
        Expr::circ(Expr::gen(gen("x")), Expr::gen(gen("y"))),
        Expr::gen(gen("y")),
    );
    let mut t = Tally::default();
    t.record(
        "regression",
        regression.eval_canonical() == FracExpr::frac(Expr::gen(gen("x")), Expr::Identity).eval_canonical(),
        || "frac(x o y, y) != frac(x, e)".into(),
    );
    report.absorb(t);
    sweep(&mut report, &inputs, |(abc, (k1, k2)), t| {
        let w = || format!("a = {}; b = {}; c = {}; k1 = {k1}; k2 = {k2}", abc[0], abc[1], abc[2]);
        let [a, b, c] = abc.each_ref().map(FracExpr::eval_canonical);
        let (k1, k2) = (k1.eval_canonical(), k2.eval_canonical());
        let scale = |f: &F, k: &BracePoly| F::new(f.num.circ(k), f.den.circ(k));
        let a1 = scale(&a, &k1);
        let a2 = scale(&a1, &k2);
        let n = F::neutral();
        t.record("equiv_reflexive", a.equiv(&a), w);
        t.record("equiv_symmetric", a.equiv(&a1) && a1.equiv(&a), w);
        t.record("equiv_transitive", !(a.equiv(&a1) && a1.equiv(&a2)) || a.equiv(&a2), w);
        t.record(
            "congruence",
            a1.star(&b).equiv(&a.star(&b))
                && b.star(&a1).equiv(&b.star(&a))
                && a1.circ(&b).equiv(&a.circ(&b))
                && a1.star_inv().equiv(&a.star_inv())
                && a1.circ_inv().equiv(&a.circ_inv()),
            w,
        );
        t.record("star_associativity", a.star(&b.star(&c)).equiv(&a.star(&b).star(&c)), w);
        t.record("star_identity", a.star(&n).equiv(&a) && n.star(&a).equiv(&a), w);
        let ai = a.star_inv();
        t.record("star_inverse", a.star(&ai).equiv(&n) && ai.star(&a).equiv(&n), w);
        t.record("circ_associativity", a.circ(&b.circ(&c)).equiv(&a.circ(&b).circ(&c)), w);
        t.record("circ_commutativity", a.circ(&b).equiv(&b.circ(&a)), w);
        t.record("circ_identity", a.circ(&n).equiv(&a), w);
        t.record("circ_inverse", a.circ(&a.circ_inv()).equiv(&n), w);
        t.record(
            "left_distributivity",
            a.circ(&b.star(&c)).equiv(&a.circ(&b).star(&ai).star(&a.circ(&c))),
            w,
        );
        t.record(
            "right_distributivity",
            b.star(&c).circ(&a).equiv(&b.circ(&a).star(&ai).star(&c.circ(&a))),
            w,
        );
        t.record(
            "iota_injective",
            F::from_wire(a.num.clone()).equiv(&F::from_wire(b.num.clone())) == (a.num == b.num),
            w,
        );
    });
    report
}

fn word_triple(r: &mut SeededRng) -> [Word<CMono>; 3] {
    let p = WordParams::default();
    [(); 3].map(|_| sampling::word(r, &p))
}

/// Fox calculus, the embedding, and the word-level extensions.
pub fn fox(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("fox", seed, samples);
    let mut rng = sampling::rng(seed);
    embedding_into(&mut report, &mut rng, samples);
    fox_rules_into(&mut report, &mut rng, samples);
    word_wires_into(&mut report, &mut rng, samples);
    fox_collapse_into(&mut report, &mut rng, samples);
    report
}

/// Embedding is a wire morphism, `∘_l` and `∘_r` agree after embedding, and
/// the image lies in the canonical wire with `eval_X = project`.
pub fn embedding(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("fox", seed, samples);
    embedding_into(&mut report, &mut sampling::rng(seed), samples);
    report
}

fn embedding_into(report: &mut SuiteReport, rng: &mut SeededRng, samples: usize) {
    let pairs = draw(rng, samples, |r| {
        let [u, v, _] = word_triple(r);
        (u, v)
    });
    sweep(report, &pairs, |(u, v), t| {
        let w = || format!("u = {u}; v = {v}");
        let (eu, ev) = (u.embed(), v.embed());
        let lv = u.circ_l(v);
        t.record("embed_circ", lv.embed() == eu.circ(&ev), w);
        t.record("embed_star", u.mul(v).embed() == eu.star(&ev), w);
        t.record("circ_l_circ_r_agree", lv.embed() == u.circ_r(v).embed(), w);
        t.record(
            "embed_image",
            eu.eval_1().is_one() && *eu.eval_x() == u.project() && BracePoly::new(eu.poly().clone()).is_ok(),
            || format!("u = {u}"),
        );
    });
}

fn monos_of(u: &Word<CMono>, v: &Word<CMono>) -> Vec<CMono> {
    let mut ms: Vec<CMono> = u.letters().iter().chain(v.letters()).map(|(m, _)| m.clone()).collect();
    ms.sort();
    ms.dedup();
    ms
}

fn fox_rules_into(report: &mut SuiteReport, rng: &mut SeededRng, samples: usize) {
    let pairs = draw(rng, samples, |r| {
        let [u, v, _] = word_triple(r);
        (u, v)
    });
    sweep(report, &pairs, |(u, v), t| {
        let w = || format!("u = {u}; v = {v}");
        let pu = GroupRingElt::from_group(u.project());
        let pu_inv = GroupRingElt::from_group(u.project().inv());
        let uv = u.mul(v);
        let ui = u.inv();
        let monos = monos_of(u, v);
        t.record(
            "fox_product_rule",
            monos.iter().all(|s| uv.fox(s) == &u.fox(s) + &(&pu * &v.fox(s))),
            w,
        );
        t.record(
            "fox_inverse_rule",
            monos.iter().all(|s| ui.fox(s) == -(&pu_inv * &u.fox(s))),
            w,
        );
    });
}

fn word_wires_into(report: &mut SuiteReport, rng: &mut SeededRng, samples: usize) {
    let short = WordParams {
        max_letters: 4,
        ..WordParams::default()
    };
    let inputs = draw(rng, samples, |r| {
        let c = [(); 3].map(|_| sampling::word(r, &short));
        let n = [(); 3].map(|_| sampling::nc_word(r, &short));
        (c, n)
    });
    fn check<M: Monomial>(t: &mut Tally, alphabet: &str, [u, v, x]: &[Word<M>; 3]) {
        let w = || format!("u = {u}; v = {v}; w = {x}");
        t.record(
            &format!("circ_l_associativity_{alphabet}"),
            u.circ_l(&v.circ_l(x)) == u.circ_l(v).circ_l(x),
            w,
        );
        t.record(
            &format!("circ_r_associativity_{alphabet}"),
            u.circ_r(&v.circ_r(x)) == u.circ_r(v).circ_r(x),
            w,
        );
        t.record(
            &format!("circ_l_left_distributivity_{alphabet}"),
            u.circ_l(&v.mul(x)) == u.circ_l(v).mul(&u.inv()).mul(&u.circ_l(x)),
            w,
        );
        t.record(
            &format!("circ_r_right_distributivity_{alphabet}"),
            u.mul(v).circ_r(x) == u.circ_r(x).mul(&x.inv()).mul(&v.circ_r(x)),
            w,
        );
    }
    sweep(report, &inputs, |(c, n), t| {
        check(t, "commutative", c);
        check(t, "noncommutative", n);
    });
}

/// Commutators of `N`-elements embed to the identity.
pub fn fox_collapse(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("fox", seed, samples);
    fox_collapse_into(&mut report, &mut sampling::rng(seed), samples);
    report
}

fn fox_collapse_into(report: &mut SuiteReport, rng: &mut SeededRng, samples: usize) {
    let p = WordParams::default();
    let words = draw(rng, samples, |r| sampling::n_commutator(r, &p));
    sweep(report, &words, |u, t| {
        t.record("fox_collapse", u.embed().is_identity(), || format!("u = {u}"));
    });
}

/// The augmentation onto the radical wire, its axioms, and the shift.
pub fn radical(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("radical", seed, samples);
    let mut rng = sampling::rng(seed);
    let p = ExprParams::default().with_depth(4);
    let triples = draw(&mut rng, samples, |r| [(); 3].map(|_| sampling::expr(r, &p)));

    let (x, y) = (BracePoly::generator(gen("x")), BracePoly::generator(gen("y")));
    let expected = RadicalPoly::new(IntPoly::from_terms([
        (TMono::var(gen("x")), BigInt::one()),
        (TMono::var(gen("y")), BigInt::one()),
        (TMono::one(), -BigInt::one()),
    ]))
    .expect("coefficient sum 1");
    let mut t = Tally::default();
    t.record(
        "regression",
        RadicalPoly::project(&x.star(&y)) == expected && RadicalPoly::project(&y.star(&x)) == expected,
        || "project(x * y) or project(y * x) differs from t[x] + t[y] - 1".into(),
    );
    t.record(
        "project_identity",
        RadicalPoly::project(&BracePoly::identity()) == RadicalPoly::one(),
        String::new,
    );
    report.absorb(t);

    sweep(&mut report, &triples, |[a, b, c], t| {
        let w = || show3(a, b, c);
        let (u, v, x) = (a.eval_canonical(), b.eval_canonical(), c.eval_canonical());
        let [f, g, h] = [&u, &v, &x].map(RadicalPoly::project);
        t.record("project_star", RadicalPoly::project(&u.star(&v)) == f.star(&g), w);
        t.record(
            "project_star_inv",
            RadicalPoly::project(&u.star_inv()) == f.star_inv(),
            w,
        );
        t.record("project_circ", RadicalPoly::project(&u.circ(&v)) == f.circ(&g), w);
        t.record("star_associativity", f.star(&g.star(&h)) == f.star(&g).star(&h), w);
        t.record("star_inverse", f.star(&f.star_inv()) == RadicalPoly::one(), w);
        t.record("circ_associativity", f.circ(&g.circ(&h)) == f.circ(&g).circ(&h), w);
        t.record("circ_commutativity", f.circ(&g) == g.circ(&f), w);
        t.record(
            "left_distributivity",
            f.circ(&g.star(&h)) == f.circ(&g).star(&f.star_inv()).star(&f.circ(&h)),
            w,
        );
        let (sf, sg) = (f.shift(), g.shift());
        t.record("shift_multiplicative", f.circ(&g).shift() == sf.mul(&sg), w);
        t.record(
            "shift_twisted_addition",
            f.star(&g).shift() == sf.add(&sg).sub(&IntPoly::one()),
            w,
        );
        t.record("shift_constant_term", sf.constant_term().is_one(), w);
    });
    report
}

/// Every built-in ring wire over `ℤ/2` and `ℤ/3` (n ≤ 2, trivial or full
/// unit subgroups): whenever the endomorphism conditions hold, the right-wire
/// axioms hold on the carrier. Sweeps are exhaustive at these sizes;
/// `samples` and `seed` only matter for instances above the exhaustive limit.
pub fn ringwire(samples: usize, seed: u64) -> SuiteReport {
    let mut report = SuiteReport::new("ringwire", seed, samples);
    let sweep = Sweep::Auto { samples, seed };
    let mut t = Tally::default();
    for name in BUILTINS {
        for n in 1..=2usize {
            for m in 2..=3u32 {
                let (ring, spec) = ring_wires::builtin(name, n, m, &[1]).expect("valid builtin");
                for (gname, hname) in [
                    ("trivial", "trivial"),
                    ("units", "trivial"),
                    ("trivial", "units"),
                    ("units", "units"),
                ] {
                    let pick = |s: &str, r: &FiniteRing| {
                        if s == "units" {
                            Subgroup::units(r)
                        } else {
                            Subgroup::trivial(r)
                        }
                    };
                    let (g, h) = (pick(gname, &ring), pick(hname, &ring));
                    let label = format!("{name} n={n} mod={m} G={gname} H={hname}");
                    let conditions = check_conditions(&ring, &spec, &g, &h, sweep);
                    let must_hold = name == "indicator_diag" && gname == "trivial" && hname == "trivial";
                    if must_hold {
                        t.record("indicator_diag_conditions", conditions.passed(), || {
                            format!("{label}: {}", first_failure(&conditions))
                        });
                    }
                    if conditions.passed() {
                        let verified = WireInstance::new(ring, spec.clone(), g, h).verify(sweep);
                        t.record("conditions_imply_wire", verified.passed(), || {
                            format!("{label}: {}", first_failure(&verified))
                        });
                    }
                }
                if name == "trivial_both" {
                    let elements = ring.elements();
                    let one = ring.one();
                    let twist = elements.iter().all(|u| {
                        elements
                            .iter()
                            .all(|v| spec.star(&ring, u, v) == ring.add(&ring.sub(u, &one), v))
                    });
                    t.record("trivial_both_twist", twist, || format!("n={n} mod={m}"));
                }
            }
        }
    }
    report.absorb(t);
    report
}

fn first_failure(r: &ring_wires::Report) -> String {
    r.failures()
        .next()
        .map(|e| format!("{} {}", e.condition, e.witness.join(" ")))
        .unwrap_or_default()
}
