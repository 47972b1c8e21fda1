//! Words over monomials, the two extensions of `∘`, Fox derivatives and the
//! embedding into the canonical wire.

use freebrace::notation::{parse_cmono, parse_word};
use freebrace::{CMono, NCMono, Word};

pub fn run() -> String {
    let mut out = String::new();
    let u: Word<CMono> = parse_word("[x].[x o y].[x]^-1").unwrap();
    for s in ["x", "x o y", "z"] {
        let s = parse_cmono(s).unwrap();
        out += &format!("d({u})/d[{s}] = {}\n", u.fox(&s));
    }
    out += &format!("project = {}\n", u.project());
    out += &format!("embed = {}\n", u.embed());

    // ∘_l and ∘_r differ as words but agree after embedding.
    let v: Word<CMono> = parse_word("[y].[z]^-1").unwrap();
    let (l, r) = (u.circ_l(&v), u.circ_r(&v));
    out += &format!("u o_l v = {l}\nu o_r v = {r}\n");
    out += &format!("same image: {}\n", l.embed() == r.embed());

    let w: Word<CMono> = parse_word("[x o z].[z]^-1.[y o z]").unwrap();
    out += &format!("embed({w}) = {}\n", w.embed());

    // Non-commutative monomials support the word operations, not the embedding.
    let p: Word<NCMono> = parse_word("[x o y].[y o x]^-1").unwrap();
    out += &format!("noncommutative: {p} o_l {p} = {}\n", p.circ_l(&p));
    out
}

fn main() {
    print!("{}", run());
}
