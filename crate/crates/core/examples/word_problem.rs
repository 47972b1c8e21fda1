//! Deciding equalities between expressions, the way the `eq` and `feq`
//! commands do.

use freebrace::expr::{parse, Parsed};

fn decide(lhs: &str, rhs: &str) -> bool {
    match (parse(lhs).unwrap(), parse(rhs).unwrap()) {
        (Parsed::Wire(a), Parsed::Wire(b)) => a.eval_canonical() == b.eval_canonical(),
        (a, b) => a.into_fraction().eval_canonical() == b.into_fraction().eval_canonical(),
    }
}

pub fn run() -> String {
    let cases = [
        ("x o y", "y o x"),
        ("x * y", "y * x"),
        ("x o (y * z)", "x o y * inv(x) * x o z"),
        ("(y * z) o x", "y o x * inv(x) * z o x"),
        ("inv(x) * (x o y) * inv(y)", "inv(y) * (y o x) * inv(x)"),
        ("frac(x o y, y)", "frac(x, e)"),
        ("cinv(frac(x, y)) o x", "y"),
        ("x o x", "x"),
    ];
    let mut out = String::new();
    for (l, r) in cases {
        let verdict = if decide(l, r) { "EQUAL" } else { "DIFFERENT" };
        out += &format!("{l}  ::  {r}  ->  {verdict}\n");
    }
    out
}

fn main() {
    print!("{}", run());
}
