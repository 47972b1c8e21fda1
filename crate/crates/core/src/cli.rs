//! The `freebrace` command line.
//!
//! Exit codes: 0 for equal / pass, 1 for different / fail, 2 for usage,
//! parse and domain errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::brace_fractions::Fraction;
use crate::canonical_wire::BracePoly;
use crate::error::{Error, Result};
use crate::expr::{self, Parsed};
use crate::notation::{parse_any_word, parse_cmono};
use crate::ring_wires::{self, check_conditions, FiniteRing, Subgroup, Sweep, WireInstance};
use crate::suites;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DIFFERENT: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "freebrace",
    version,
    about = "Exact computation in the free commutative skew brace"
)]
pub struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a wire or fraction expression.
    Eval {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        expr: Vec<String>,
    },
    /// Decide `lhs :: rhs` for wire expressions (fractions if either side is one).
    Eq {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Decide `lhs :: rhs` in the skew brace of fractions.
    Feq {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Fox derivative of a word with respect to a monomial.
    Fox {
        word: String,
        #[arg(long)]
        wrt: String,
        #[command(flatten)]
        alphabet: Alphabet,
    },
    /// Image of a word in the free commutative group.
    Project {
        word: String,
        #[command(flatten)]
        alphabet: Alphabet,
    },
    /// Canonical-wire polynomial of a word.
    Embed {
        word: String,
        #[command(flatten)]
        alphabet: Alphabet,
    },
    /// Run a seeded property suite: wire, fractions, fox, radical, ringwire.
    Axioms {
        suite: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Check a ring-based right wire built from a pair of endomorphisms.
    Ringwire(RingwireArgs),
}

#[derive(Args, Debug)]
pub struct Alphabet {
    /// Read the word over the non-commutative alphabet.
    #[arg(long)]
    pub noncommutative: bool,
}

#[derive(Args, Debug)]
pub struct RingwireArgs {
    /// One of indicator_diag, trivial_both, identity_p_trivial_pi.
    #[arg(long)]
    pub example: String,
    /// Matrix size (upper-triangular n×n).
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long = "mod", default_value_t = 2)]
    pub modulus: u32,
    /// 1-based diagonal positions for indicator_diag (repeat or comma-separate).
    #[arg(long = "E", value_delimiter = ',')]
    pub e: Vec<usize>,
    /// Subgroup for p: trivial or units.
    #[arg(long = "G", default_value = "trivial")]
    pub g: String,
    /// Subgroup for π: trivial or units.
    #[arg(long = "H", default_value = "trivial")]
    pub h: String,
    /// Visit every tuple regardless of size.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long, default_value_t = 2000)]
    pub samples: usize,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", json!({ "error": e.to_string() }));
            }
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(out: &mut dyn Write, json: bool, value: Value, text: &str) -> Result<()> {
    let r = if json {
        writeln!(out, "{value}")
    } else {
        write!(out, "{text}")
    };
    r.map_err(|e| Error::Output(e.to_string()))
}

fn split_sides(words: &[String]) -> Result<(String, String)> {
    let joined = words.join(" ");
    match joined.split_once("::") {
        Some((l, r)) if !r.contains("::") => Ok((l.trim().to_string(), r.trim().to_string())),
        _ => Err(crate::error::ParseError::new(
            joined.len(),
            &["exactly one `::` between the two sides"],
            "end of input",
        )
        .into()),
    }
}

fn verdict(equal: bool) -> (&'static str, i32) {
    if equal {
        ("EQUAL", EXIT_OK)
    } else {
        ("DIFFERENT", EXIT_DIFFERENT)
    }
}

fn compare_fractions(out: &mut dyn Write, json: bool, l: Fraction<BracePoly>, r: Fraction<BracePoly>) -> Result<i32> {
    let (word, code) = verdict(l.equiv(&r));
    let value = json!({ "verdict": word, "kind": "fraction", "lhs": l.to_json(), "rhs": r.to_json() });
    emit(out, json, value, &format!("{word}\nlhs: {l}\nrhs: {r}\n"))?;
    Ok(code)
}

fn subgroup(name: &str, ring: &FiniteRing) -> Result<Subgroup> {
    match name {
        "trivial" => Ok(Subgroup::trivial(ring)),
        "units" => Ok(Subgroup::units(ring)),
        other => Err(Error::InvalidRing(format!(
            "unknown subgroup `{other}` (expected trivial or units)"
        ))),
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Eval { expr: words } => {
            let input = words.join(" ");
            match expr::parse(&input)? {
                Parsed::Wire(e) => {
                    let nf = e.eval_canonical();
                    emit(
                        out,
                        json,
                        json!({ "kind": "wire", "value": nf.to_json(), "text": nf.to_string() }),
                        &format!("{nf}\n"),
                    )?;
                }
                Parsed::Fraction(f) => {
                    let nf = f.eval_canonical();
                    emit(
                        out,
                        json,
                        json!({ "kind": "fraction", "value": nf.to_json(), "text": nf.to_string() }),
                        &format!("{nf}\n"),
                    )?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Eq { exprs } => {
            let (l, r) = split_sides(exprs)?;
            match (expr::parse(&l)?, expr::parse(&r)?) {
                (Parsed::Wire(a), Parsed::Wire(b)) => {
                    let (a, b) = (a.eval_canonical(), b.eval_canonical());
                    let (word, code) = verdict(a == b);
                    let value = json!({ "verdict": word, "kind": "wire", "lhs": a.to_json(), "rhs": b.to_json() });
                    emit(out, json, value, &format!("{word}\nlhs: {a}\nrhs: {b}\n"))?;
                    Ok(code)
                }
                (a, b) => compare_fractions(
                    out,
                    json,
                    a.into_fraction().eval_canonical(),
                    b.into_fraction().eval_canonical(),
                ),
            }
        }
        Command::Feq { exprs } => {
            let (l, r) = split_sides(exprs)?;
            let (a, b) = (expr::parse_frac_expr(&l)?, expr::parse_frac_expr(&r)?);
            compare_fractions(out, json, a.eval_canonical(), b.eval_canonical())
        }
        Command::Fox { word, wrt, alphabet } => {
            let w = parse_any_word(word, !alphabet.noncommutative)?;
            let s = parse_cmono(wrt)?;
            let d = w.fox(&s)?;
            let value = json!({ "word": w.to_string(), "wrt": s.to_string(), "value": d, "text": d.to_string() });
            emit(out, json, value, &format!("{d}\n"))?;
            Ok(EXIT_OK)
        }
        Command::Project { word, alphabet } => {
            let w = parse_any_word(word, !alphabet.noncommutative)?;
            let g = w.project()?;
            emit(
                out,
                json,
                json!({ "word": w.to_string(), "value": g, "text": g.to_string() }),
                &format!("{g}\n"),
            )?;
            Ok(EXIT_OK)
        }
        Command::Embed { word, alphabet } => {
            let w = parse_any_word(word, !alphabet.noncommutative)?;
            let f = w.embed()?;
            emit(
                out,
                json,
                json!({ "word": w.to_string(), "value": f.to_json(), "text": f.to_string() }),
                &format!("{f}\n"),
            )?;
            Ok(EXIT_OK)
        }
        Command::Axioms { suite, samples, seed } => {
            let report = suites::run(suite, *samples, *seed)?;
            emit(out, json, report.to_json(), &report.to_text())?;
            Ok(if report.passed() { EXIT_OK } else { EXIT_DIFFERENT })
        }
        Command::Ringwire(args) => ringwire(args, json, out),
    }
}

fn ringwire(args: &RingwireArgs, json: bool, out: &mut dyn Write) -> Result<i32> {
    let (ring, spec) = ring_wires::builtin(&args.example, args.n, args.modulus, &args.e)?;
    let (g, h) = (subgroup(&args.g, &ring)?, subgroup(&args.h, &ring)?);
    let sweep = if args.exhaustive {
        Sweep::Exhaustive
    } else {
        Sweep::Auto {
            samples: args.samples,
            seed: args.seed,
        }
    };
    let mut report = check_conditions(&ring, &spec, &g, &h, sweep);
    let instance = WireInstance::new(ring, spec, g, h);
    let carrier_size = instance.carrier.len();
    report.extend(instance.verify(sweep));
    let passed = report.passed();
    let text = format!(
        "ringwire {} n={} mod={} E={:?} G={} H={}  |U|={carrier_size}  sweep: {}\n{}{}\n",
        args.example,
        args.n,
        args.modulus,
        args.e,
        args.g,
        args.h,
        sweep.describe(),
        report.to_table(),
        if passed { "PASS" } else { "FAIL" },
    );
    emit(out, json, report.to_json(), &text)?;
    Ok(if passed { EXIT_OK } else { EXIT_DIFFERENT })
}
