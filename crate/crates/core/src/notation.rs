//! Readers for the textual forms printed by this crate: group elements,
//! group-ring elements, polynomials in `t[x]`, monomials and word literals
//! such as `[x o y].[z]^-1.[y o z]`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::canonical_wire::{BracePoly, GrPoly};
use crate::error::{Error, ParseError, Result};
use crate::group_algebra::{GeneratorId, GroupElt, GroupRingElt};
use crate::poly::{IntPoly, TMono};
use crate::radical_model::RadicalPoly;
use crate::word_model::{AnyWord, CMono, Monomial, NCMono, Sign, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => s.clone(),
            Tok::Int(n) => n.to_string(),
            Tok::Sym(c) => c.to_string(),
            Tok::End => String::new(),
        }
    }
}

pub(crate) fn lex(input: &str, symbols: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
        } else if b.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(input[start..i].to_string())));
        } else if b.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = input[start..i]
                .parse()
                .map_err(|_| ParseError::new(start, &["integer"], &input[start..i]))?;
            out.push((start, Tok::Int(n)));
        } else if symbols.as_bytes().contains(&b) {
            out.push((i, Tok::Sym(b as char)));
            i += 1;
        } else {
            let c = input[i..].chars().next().unwrap_or('?');
            return Err(ParseError::new(i, &["token"], c.to_string()).into());
        }
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

pub(crate) struct Cursor {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Cursor {
    pub(crate) fn new(input: &str, symbols: &str) -> Result<Self> {
        Ok(Cursor {
            toks: lex(input, symbols)?,
            pos: 0,
        })
    }

    pub(crate) fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    pub(crate) fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].1
    }

    pub(crate) fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    pub(crate) fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    pub(crate) fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        Err(ParseError::new(self.offset(), expected, self.peek().describe()).into())
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.fail(&[&format!("`{c}`")])
        }
    }

    pub(crate) fn ident(&mut self) -> Result<GeneratorId> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                GeneratorId::new(&name)
            }
            _ => self.fail(&["identifier"]),
        }
    }

    pub(crate) fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.fail(&["end of input"])
        }
    }

    fn signed_int(&mut self) -> Result<BigInt> {
        let negative = self.eat('-');
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                Ok(if negative { -n } else { n })
            }
            _ => self.fail(&["integer"]),
        }
    }
}

const POLY_SYMBOLS: &str = "+-*^()[]";

fn small_exponent(c: &Cursor, n: BigInt) -> Result<i64> {
    i64::try_from(n).or_else(|_| c.fail(&["exponent fitting in 64 bits"]))
}

fn starts_primary(t: &Tok) -> bool {
    matches!(t, Tok::Ident(_) | Tok::Int(_) | Tok::Sym('('))
}

fn poly_sum(c: &mut Cursor) -> Result<GrPoly> {
    let mut acc = GrPoly::zero();
    let mut negative = c.eat('-');
    loop {
        let term = poly_term(c)?;
        acc = if negative { acc.sub(&term) } else { acc.add(&term) };
        if c.eat('+') {
            negative = false;
        } else if c.eat('-') {
            negative = true;
        } else {
            return Ok(acc);
        }
    }
}

fn poly_term(c: &mut Cursor) -> Result<GrPoly> {
    let mut acc = poly_primary(c)?;
    loop {
        if c.eat('*') || starts_primary(c.peek()) {
            acc = acc.mul(&poly_primary(c)?);
        } else {
            return Ok(acc);
        }
    }
}

fn poly_primary(c: &mut Cursor) -> Result<GrPoly> {
    match c.peek().clone() {
        Tok::Int(n) => {
            c.bump();
            Ok(GrPoly::constant(GroupRingElt::from_int(n)))
        }
        Tok::Sym('(') => {
            c.bump();
            let inner = poly_sum(c)?;
            c.expect(')')?;
            Ok(inner)
        }
        Tok::Ident(name) if name == "t" && *c.peek_at(1) == Tok::Sym('[') => {
            c.bump();
            c.bump();
            let x = c.ident()?;
            c.expect(']')?;
            let d = if c.eat('^') {
                let n = c.signed_int()?;
                u32::try_from(n).or_else(|_| c.fail(&["nonnegative degree"]))?
            } else {
                1
            };
            Ok(GrPoly::monomial(TMono::from_degrees([(x, d)]), GroupRingElt::one()))
        }
        Tok::Ident(_) => {
            let x = c.ident()?;
            let e = if c.eat('^') {
                let n = c.signed_int()?;
                small_exponent(c, n)?
            } else {
                1
            };
            let g = GroupElt::from_exponents([(x, e)]);
            Ok(GrPoly::constant(GroupRingElt::from_group(g)))
        }
        _ => c.fail(&["integer", "generator", "t[...]", "`(`"]),
    }
}

/// Reads any polynomial in `t[x]` over the group ring, e.g.
/// `2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]` or `(1 - x)*t[y]`.
pub fn parse_gr_poly(input: &str) -> Result<GrPoly> {
    let mut c = Cursor::new(input, POLY_SYMBOLS)?;
    let p = poly_sum(&mut c)?;
    c.finish()?;
    Ok(p)
}

/// Reads a member of the canonical wire, validating both membership conditions.
pub fn parse_brace_poly(input: &str) -> Result<BracePoly> {
    BracePoly::new(parse_gr_poly(input)?)
}

pub fn parse_group_ring(input: &str) -> Result<GroupRingElt> {
    let p = parse_gr_poly(input)?;
    if p.terms().any(|(m, _)| !m.is_one()) {
        return Err(ParseError::new(0, &["group-ring element without t[...]"], input).into());
    }
    Ok(p.constant_term())
}

pub fn parse_group_elt(input: &str) -> Result<GroupElt> {
    let r = parse_group_ring(input)?;
    r.as_group_elt()
        .cloned()
        .ok_or_else(|| ParseError::new(0, &["group element"], input).into())
}

/// Reads a polynomial with integer coefficients.
pub fn parse_int_poly(input: &str) -> Result<IntPoly> {
    let p = parse_gr_poly(input)?;
    let mut out = IntPoly::zero();
    for (m, c) in p.terms() {
        let k = c.coeff(&GroupElt::identity());
        if c.len() > 1 || (c.len() == 1 && k.is_zero()) {
            return Err(ParseError::new(0, &["integer coefficients"], c.to_string()).into());
        }
        out.add_term(m.clone(), k);
    }
    Ok(out)
}

pub fn parse_radical_poly(input: &str) -> Result<RadicalPoly> {
    RadicalPoly::new(parse_int_poly(input)?)
}

const WORD_SYMBOLS: &str = "[].^-";

fn generators(c: &mut Cursor) -> Result<Vec<GeneratorId>> {
    let mut gens = vec![c.ident()?];
    while matches!(c.peek(), Tok::Ident(s) if s == "o") {
        c.bump();
        gens.push(c.ident()?);
    }
    if gens.iter().any(|g| g.as_str() == "o") {
        return c.fail(&["generator other than `o`"]);
    }
    Ok(gens)
}

fn word_letters(c: &mut Cursor) -> Result<Vec<(Vec<GeneratorId>, Sign)>> {
    if matches!(c.peek(), Tok::Ident(s) if s == "e") && *c.peek_at(1) == Tok::End {
        c.bump();
        return Ok(Vec::new());
    }
    let mut letters = Vec::new();
    loop {
        c.expect('[')?;
        let gens = generators(c)?;
        c.expect(']')?;
        let sign = if c.eat('^') {
            let at = c.offset();
            match c.signed_int()? {
                n if n == BigInt::one() => Sign::Plus,
                n if n == -BigInt::one() => Sign::Minus,
                n => return Err(ParseError::new(at, &["`1`", "`-1`"], n.to_string()).into()),
            }
        } else {
            Sign::Plus
        };
        letters.push((gens, sign));
        if !c.eat('.') {
            return Ok(letters);
        }
    }
}

fn build_word<M: Monomial>(letters: Vec<(Vec<GeneratorId>, Sign)>) -> Word<M> {
    Word::from_letters(letters.into_iter().map(|(gens, s)| {
        let mono = gens
            .into_iter()
            .map(M::generator)
            .reduce(|a, b| a.circ(&b))
            .expect("letters are nonempty");
        (mono, s)
    }))
}

/// Reads a word literal (`e` for the empty word); the result is freely reduced.
pub fn parse_word<M: Monomial>(input: &str) -> Result<Word<M>> {
    let mut c = Cursor::new(input, WORD_SYMBOLS)?;
    let letters = word_letters(&mut c)?;
    c.finish()?;
    Ok(build_word(letters))
}

pub fn parse_any_word(input: &str, commutative: bool) -> Result<AnyWord> {
    Ok(if commutative {
        AnyWord::Commutative(parse_word(input)?)
    } else {
        AnyWord::NonCommutative(parse_word(input)?)
    })
}

/// Reads a monomial, bracketed or not: `x o y` or `[x o y]`.
pub fn parse_cmono(input: &str) -> Result<CMono> {
    let mut c = Cursor::new(input, WORD_SYMBOLS)?;
    let bracketed = c.eat('[');
    let gens = generators(&mut c)?;
    if bracketed {
        c.expect(']')?;
    }
    c.finish()?;
    CMono::from_generators(gens).ok_or(Error::WrongAlphabet)
}

pub fn parse_ncmono(input: &str) -> Result<NCMono> {
    let mut c = Cursor::new(input, WORD_SYMBOLS)?;
    let bracketed = c.eat('[');
    let gens = generators(&mut c)?;
    if bracketed {
        c.expect(']')?;
    }
    c.finish()?;
    NCMono::new(gens).ok_or(Error::WrongAlphabet)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_algebra::gen;

    #[test]
    fn group_ring_text() {
        let r = parse_group_ring("1 - x y").unwrap();
        assert_eq!(r.to_string(), "1 - x y");
        assert_eq!(parse_group_ring("2 - x^-1").unwrap().augment(), BigInt::from(1));
        assert!(parse_group_ring("0").unwrap().is_zero());
        assert_eq!(parse_group_elt("x^2 y^-1").unwrap().to_string(), "x^2 y^-1");
        assert!(parse_group_elt("1").unwrap().is_identity());
        assert!(parse_group_elt("2*x").is_err());
        assert!(parse_group_ring("t[x]").is_err());
    }

    #[test]
    fn polynomial_text() {
        let text = "2 - x^-1*t[x] - t[y] + x^-1*t[x]t[y]";
        let p = parse_brace_poly(text).unwrap();
        assert_eq!(p.to_string(), text);
        let q = parse_gr_poly("(1 - x)*t[y] + x*t[y]").unwrap();
        assert_eq!(q, GrPoly::var(gen("y")));
        assert!(parse_brace_poly("t[x] + t[y]").is_err());
        let r = parse_radical_poly("2 - t[x] + t[x]t[y] - t[y]").unwrap();
        assert_eq!(r.to_string(), "2 - t[x] - t[y] + t[x]t[y]");
        assert!(parse_int_poly("x*t[y]").is_err());
    }

    #[test]
    fn polynomial_errors_carry_offsets() {
        match parse_gr_poly("t[x] + ?") {
            Err(Error::Parse(e)) => assert_eq!(e.offset, 7),
            other => panic!("{other:?}"),
        }
        match parse_gr_poly("t[x] +") {
            Err(Error::Parse(e)) => {
                assert_eq!(e.offset, 6);
                assert!(e.found.is_empty());
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn word_literals() {
        let w: Word<CMono> = parse_word("[x o y].[z]^-1.[y o z]").unwrap();
        assert_eq!(w.to_string(), "[x o y].[z]^-1.[y o z]");
        assert_eq!(w.len(), 3);
        let reduced: Word<CMono> = parse_word("[x].[x]^-1").unwrap();
        assert!(reduced.is_empty());
        assert!(parse_word::<CMono>("e").unwrap().is_empty());
        let nc: Word<NCMono> = parse_word("[y o x]").unwrap();
        assert_eq!(nc.to_string(), "[y o x]");
        let c: Word<CMono> = parse_word("[y o x]").unwrap();
        assert_eq!(c.to_string(), "[x o y]");
        assert!(parse_word::<CMono>("[x]^2").is_err());
        assert!(parse_word::<CMono>("[x o]").is_err());
        assert!(parse_word::<CMono>("[x].").is_err());
    }

    #[test]
    fn monomials() {
        assert_eq!(parse_cmono("x o y").unwrap(), parse_cmono("[y o x]").unwrap());
        assert_eq!(parse_ncmono("x o y").unwrap().letters().len(), 2);
        assert!(parse_cmono("").is_err());
    }
}
