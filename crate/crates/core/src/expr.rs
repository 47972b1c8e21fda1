//! Wire expressions and fraction expressions.
//!
//! Grammar (whitespace insensitive, `o` binds tighter than `*`, both left
//! associative):
//!
//! ```text
//! expr  := circ ('*' circ)*
//! circ  := atom ('o' atom)*
//! atom  := 'e' | ident | '(' expr ')' | 'inv(' expr ')'
//!        | 'cinv(' expr ')' | 'frac(' expr ',' expr ')'
//! ```
//!
//! `frac` and `cinv` only make sense for fractions: an input using either is
//! a [`FracExpr`], anything else an [`Expr`]. `e`, `o`, `inv`, `cinv` and
//! `frac` are reserved and cannot name generators.

use std::fmt;

use crate::brace_fractions::{CommutativeWire, Fraction};
use crate::canonical_wire::BracePoly;
use crate::error::{Error, ParseError, Result};
use crate::group_algebra::GeneratorId;
use crate::notation::{Cursor, Tok};
use crate::word_model::{Monomial, Word};

pub const RESERVED: [&str; 5] = ["e", "o", "inv", "cinv", "frac"];

/// A term of the wire signature.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Expr {
    Identity,
    Gen(GeneratorId),
    Star(Box<Expr>, Box<Expr>),
    StarInv(Box<Expr>),
    Circ(Box<Expr>, Box<Expr>),
}

/// A term over fractions of wire terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum FracExpr {
    Frac(Expr, Expr),
    Star(Box<FracExpr>, Box<FracExpr>),
    StarInv(Box<FracExpr>),
    Circ(Box<FracExpr>, Box<FracExpr>),
    CircInv(Box<FracExpr>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Parsed {
    Wire(Expr),
    Fraction(FracExpr),
}

impl Parsed {
    /// Fraction view; a wire term `w` becomes `frac(w, e)`.
    pub fn into_fraction(self) -> FracExpr {
        match self {
            Parsed::Wire(e) => FracExpr::Frac(e, Expr::Identity),
            Parsed::Fraction(f) => f,
        }
    }
}

impl Expr {
    pub fn gen(x: GeneratorId) -> Self {
        Expr::Gen(x)
    }

    pub fn star(a: Expr, b: Expr) -> Self {
        Expr::Star(Box::new(a), Box::new(b))
    }

    pub fn circ(a: Expr, b: Expr) -> Self {
        Expr::Circ(Box::new(a), Box::new(b))
    }

    pub fn star_inv(a: Expr) -> Self {
        Expr::StarInv(Box::new(a))
    }

    pub fn depth(&self) -> usize {
        match self {
            Expr::Identity | Expr::Gen(_) => 0,
            Expr::StarInv(a) => 1 + a.depth(),
            Expr::Star(a, b) | Expr::Circ(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Evaluates in any commutative wire, given the images of the generators.
    pub fn eval_with<W: CommutativeWire>(&self, generator: &impl Fn(&GeneratorId) -> W) -> W {
        match self {
            Expr::Identity => W::identity(),
            Expr::Gen(x) => generator(x),
            Expr::Star(a, b) => a.eval_with(generator).star(&b.eval_with(generator)),
            Expr::StarInv(a) => a.eval_with(generator).star_inv(),
            Expr::Circ(a, b) => a.eval_with(generator).circ(&b.eval_with(generator)),
        }
    }

    /// Normal form in the canonical wire.
    pub fn eval_canonical(&self) -> BracePoly {
        self.eval_with(&|x: &GeneratorId| BracePoly::generator(x.clone()))
    }

    /// Evaluates in the word model with the left extension `∘_l`.
    pub fn eval_word<M: Monomial>(&self) -> Word<M> {
        match self {
            Expr::Identity => Word::empty(),
            Expr::Gen(x) => Word::generator(x.clone()),
            Expr::Star(a, b) => a.eval_word::<M>().mul(&b.eval_word()),
            Expr::StarInv(a) => a.eval_word::<M>().inv(),
            Expr::Circ(a, b) => a.eval_word::<M>().circ_l(&b.eval_word()),
        }
    }
}

impl FracExpr {
    pub fn frac(num: Expr, den: Expr) -> Self {
        FracExpr::Frac(num, den)
    }

    pub fn eval_with<W: CommutativeWire>(&self, generator: &impl Fn(&GeneratorId) -> W) -> Fraction<W> {
        match self {
            FracExpr::Frac(n, d) => Fraction::new(n.eval_with(generator), d.eval_with(generator)),
            FracExpr::Star(a, b) => a.eval_with(generator).star(&b.eval_with(generator)),
            FracExpr::StarInv(a) => a.eval_with(generator).star_inv(),
            FracExpr::Circ(a, b) => a.eval_with(generator).circ(&b.eval_with(generator)),
            FracExpr::CircInv(a) => a.eval_with(generator).circ_inv(),
        }
    }

    pub fn eval_canonical(&self) -> Fraction<BracePoly> {
        self.eval_with(&|x: &GeneratorId| BracePoly::generator(x.clone()))
    }
}

/// Parse tree before classification into wire or fraction terms.
enum Term {
    Identity,
    Gen(GeneratorId),
    Star(Box<Term>, Box<Term>),
    Circ(Box<Term>, Box<Term>),
    Inv(Box<Term>),
    CircInv(Box<Term>),
    Frac(Box<Term>, Box<Term>, usize),
}

impl Term {
    fn is_wire(&self) -> bool {
        match self {
            Term::Identity | Term::Gen(_) => true,
            Term::Star(a, b) | Term::Circ(a, b) => a.is_wire() && b.is_wire(),
            Term::Inv(a) => a.is_wire(),
            Term::CircInv(_) | Term::Frac(..) => false,
        }
    }

    fn has_circ_inv(&self) -> bool {
        match self {
            Term::Identity | Term::Gen(_) => false,
            Term::Star(a, b) | Term::Circ(a, b) | Term::Frac(a, b, _) => a.has_circ_inv() || b.has_circ_inv(),
            Term::Inv(a) => a.has_circ_inv(),
            Term::CircInv(_) => true,
        }
    }

    fn into_expr(self) -> Result<Expr> {
        Ok(match self {
            Term::Identity => Expr::Identity,
            Term::Gen(x) => Expr::Gen(x),
            Term::Star(a, b) => Expr::star(a.into_expr()?, b.into_expr()?),
            Term::Circ(a, b) => Expr::circ(a.into_expr()?, b.into_expr()?),
            Term::Inv(a) => Expr::star_inv(a.into_expr()?),
            Term::CircInv(_) => return Err(Error::CircleInverseInWire),
            Term::Frac(_, _, at) => {
                return Err(ParseError::new(at, &["wire expression (no nested frac)"], "frac").into())
            }
        })
    }

    fn into_frac(self) -> Result<FracExpr> {
        if self.is_wire() {
            return Ok(FracExpr::Frac(self.into_expr()?, Expr::Identity));
        }
        Ok(match self {
            Term::Frac(n, d, _) => FracExpr::Frac(n.into_expr()?, d.into_expr()?),
            Term::Star(a, b) => FracExpr::Star(Box::new(a.into_frac()?), Box::new(b.into_frac()?)),
            Term::Circ(a, b) => FracExpr::Circ(Box::new(a.into_frac()?), Box::new(b.into_frac()?)),
            Term::Inv(a) => FracExpr::StarInv(Box::new(a.into_frac()?)),
            Term::CircInv(a) => FracExpr::CircInv(Box::new(a.into_frac()?)),
            Term::Identity | Term::Gen(_) => unreachable!("wire terms handled above"),
        })
    }
}

const EXPR_SYMBOLS: &str = "*(),";
const ATOM_EXPECTED: [&str; 6] = ["`e`", "generator", "`(`", "`inv(`", "`cinv(`", "`frac(`"];

fn is_keyword(t: &Tok, k: &str) -> bool {
    matches!(t, Tok::Ident(s) if s == k)
}

fn star_term(c: &mut Cursor) -> Result<Term> {
    let mut acc = circ_term(c)?;
    while c.eat('*') {
        acc = Term::Star(Box::new(acc), Box::new(circ_term(c)?));
    }
    Ok(acc)
}

fn circ_term(c: &mut Cursor) -> Result<Term> {
    let mut acc = atom(c)?;
    while is_keyword(c.peek(), "o") {
        c.bump();
        acc = Term::Circ(Box::new(acc), Box::new(atom(c)?));
    }
    Ok(acc)
}

fn atom(c: &mut Cursor) -> Result<Term> {
    let at = c.offset();
    match c.peek().clone() {
        Tok::Sym('(') => {
            c.bump();
            let inner = star_term(c)?;
            c.expect(')')?;
            Ok(inner)
        }
        Tok::Ident(name) => match name.as_str() {
            "e" => {
                c.bump();
                Ok(Term::Identity)
            }
            "inv" | "cinv" => {
                c.bump();
                c.expect('(')?;
                let inner = Box::new(star_term(c)?);
                c.expect(')')?;
                Ok(if name == "inv" {
                    Term::Inv(inner)
                } else {
                    Term::CircInv(inner)
                })
            }
            "frac" => {
                c.bump();
                c.expect('(')?;
                let num = star_term(c)?;
                c.expect(',')?;
                let den = star_term(c)?;
                c.expect(')')?;
                Ok(Term::Frac(Box::new(num), Box::new(den), at))
            }
            "o" => c.fail(&ATOM_EXPECTED),
            _ => Ok(Term::Gen(c.ident()?)),
        },
        _ => c.fail(&ATOM_EXPECTED),
    }
}

fn parse_term(input: &str) -> Result<Term> {
    let mut c = Cursor::new(input, EXPR_SYMBOLS)?;
    let t = star_term(&mut c)?;
    if *c.peek() != Tok::End {
        return c.fail(&["`o`", "`*`", "end of input"]);
    }
    Ok(t)
}

/// Parses and classifies: inputs mentioning `frac` or `cinv` are fractions.
pub fn parse(input: &str) -> Result<Parsed> {
    let t = parse_term(input)?;
    if t.is_wire() {
        Ok(Parsed::Wire(t.into_expr()?))
    } else {
        Ok(Parsed::Fraction(t.into_frac()?))
    }
}

/// Parses a wire term; `cinv` is rejected with [`Error::CircleInverseInWire`].
pub fn parse_expr(input: &str) -> Result<Expr> {
    let t = parse_term(input)?;
    if t.has_circ_inv() {
        return Err(Error::CircleInverseInWire);
    }
    t.into_expr()
}

/// Parses a fraction term; plain wire subterms `w` are read as `frac(w, e)`.
pub fn parse_frac_expr(input: &str) -> Result<FracExpr> {
    parse_term(input)?.into_frac()
}

fn write_expr(e: &Expr, prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        Expr::Identity => f.write_str("e"),
        Expr::Gen(x) => write!(f, "{x}"),
        Expr::StarInv(a) => {
            f.write_str("inv(")?;
            write_expr(a, 0, f)?;
            f.write_str(")")
        }
        Expr::Star(a, b) => {
            if prec > 1 {
                f.write_str("(")?;
            }
            write_expr(a, 1, f)?;
            f.write_str(" * ")?;
            write_expr(b, 2, f)?;
            if prec > 1 {
                f.write_str(")")?;
            }
            Ok(())
        }
        Expr::Circ(a, b) => {
            if prec > 2 {
                f.write_str("(")?;
            }
            write_expr(a, 2, f)?;
            f.write_str(" o ")?;
            write_expr(b, 3, f)?;
            if prec > 2 {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

fn write_frac(e: &FracExpr, prec: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    match e {
        FracExpr::Frac(n, d) => write!(f, "frac({n}, {d})"),
        FracExpr::StarInv(a) => {
            f.write_str("inv(")?;
            write_frac(a, 0, f)?;
            f.write_str(")")
        }
        FracExpr::CircInv(a) => {
            f.write_str("cinv(")?;
            write_frac(a, 0, f)?;
            f.write_str(")")
        }
        FracExpr::Star(a, b) => {
            if prec > 1 {
                f.write_str("(")?;
            }
            write_frac(a, 1, f)?;
            f.write_str(" * ")?;
            write_frac(b, 2, f)?;
            if prec > 1 {
                f.write_str(")")?;
            }
            Ok(())
        }
        FracExpr::Circ(a, b) => {
            if prec > 2 {
                f.write_str("(")?;
            }
            write_frac(a, 2, f)?;
            f.write_str(" o ")?;
            write_frac(b, 3, f)?;
            if prec > 2 {
                f.write_str(")")?;
            }
            Ok(())
        }
    }
}

/// Minimal parentheses; parses back to the same tree.
impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(self, 0, f)
    }
}

impl fmt::Display for FracExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_frac(self, 0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;
    use crate::notation::parse_brace_poly;
    use crate::word_model::CMono;

    fn g(x: &str) -> Expr {
        Expr::gen(gen(x))
    }

    #[test]
    fn precedence() {
        assert_eq!(
            parse_expr("x o y * z").unwrap(),
            Expr::star(Expr::circ(g("x"), g("y")), g("z"))
        );
        assert_eq!(
            parse_expr("inv(x) * e").unwrap(),
            Expr::star(Expr::star_inv(g("x")), Expr::Identity)
        );
        assert_eq!(
            parse_expr("x o (y * z)").unwrap(),
            Expr::circ(g("x"), Expr::star(g("y"), g("z")))
        );
        assert_eq!(
            parse_expr("x*y*z").unwrap(),
            Expr::star(Expr::star(g("x"), g("y")), g("z"))
        );
        assert_eq!(
            parse_expr("  x   o y o z ").unwrap(),
            Expr::circ(Expr::circ(g("x"), g("y")), g("z"))
        );
    }

    #[test]
    fn parse_errors() {
        let err = |s: &str| match parse(s) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected a parse error for {s:?}, got {other:?}"),
        };
        let e = err("x * ");
        assert_eq!(e.offset, 4);
        assert!(e.expected.contains(&"generator".to_string()));
        assert_eq!(err("x y").offset, 2);
        assert_eq!(err("(x * y").offset, 6);
        assert_eq!(err("o").offset, 0);
        assert_eq!(err("x + y").offset, 2);
        assert_eq!(err("inv x").offset, 4);
        assert_eq!(err("frac(x, frac(y, e))").offset, 8);
    }

    #[test]
    fn classification() {
        assert!(matches!(parse("x o y").unwrap(), Parsed::Wire(_)));
        assert!(matches!(parse("frac(x o y, y)").unwrap(), Parsed::Fraction(_)));
        assert!(matches!(parse("cinv(x)").unwrap(), Parsed::Fraction(_)));
        assert_eq!(parse_expr("cinv(x) * y"), Err(Error::CircleInverseInWire));
        assert!(parse_expr("frac(x, y)").is_err());
        assert_eq!(
            parse_frac_expr("x * frac(y, z)").unwrap(),
            FracExpr::Star(
                Box::new(FracExpr::frac(g("x"), Expr::Identity)),
                Box::new(FracExpr::frac(g("y"), g("z")))
            )
        );
    }

    #[test]
    fn canonical_evaluation() {
        assert_eq!(
            parse_expr("x * y").unwrap().eval_canonical().to_string(),
            "-x + t[x] + x*t[y]"
        );
        let dot = parse_expr("inv(x) * (x o y) * inv(y)").unwrap().eval_canonical();
        assert_eq!(dot, parse_brace_poly("2 - x^-1*t[x] + x^-1*t[x]t[y] - t[y]").unwrap());
        assert!(parse_expr("e").unwrap().eval_canonical().is_identity());
    }

    #[test]
    fn word_evaluation() {
        let w: Word<CMono> = parse_expr("x o y").unwrap().eval_word();
        assert_eq!(w.to_string(), "[x o y]");
        let w: Word<CMono> = parse_expr("x * y").unwrap().eval_word();
        assert_eq!(w.to_string(), "[x].[y]");
        let e = parse_expr("(x * inv(y)) o z * inv(z o x)").unwrap();
        assert_eq!(e.eval_word::<CMono>().embed(), e.eval_canonical());
    }

    #[test]
    fn fraction_evaluation() {
        let a = parse_frac_expr("frac(x o y, y)").unwrap().eval_canonical();
        let b = parse_frac_expr("frac(x, e)").unwrap().eval_canonical();
        assert_eq!(a, b);
        let c = parse_frac_expr("cinv(frac(x, y)) o frac(x, y)")
            .unwrap()
            .eval_canonical();
        assert_eq!(c, Fraction::neutral());
    }

    #[test]
    fn rendering_round_trips() {
        for s in [
            "x o y * z",
            "x o (y * z)",
            "inv(x * y) o e",
            "x * (y * z)",
            "(x o y) o z * w",
            "x o (y o z)",
        ] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{s}");
        }
        assert_eq!(parse_expr("(x o y) * z").unwrap().to_string(), "x o y * z");
        let f = parse_frac_expr("cinv(frac(x, e) * x) o frac(y o y, x)").unwrap();
        assert_eq!(parse_frac_expr(&f.to_string()).unwrap(), f);
    }
}
