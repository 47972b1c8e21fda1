//! The free commutative skew brace as fractions of the canonical wire.

use freebrace::expr::parse_frac_expr;
use freebrace::{gen, BracePoly, Fraction};

pub fn run() -> String {
    let mut out = String::new();
    let eval = |s: &str| parse_frac_expr(s).unwrap().eval_canonical();

    let a = eval("frac(x o y, y)");
    let b = eval("frac(x, e)");
    out += &format!("{a} == {b}: {}\n", a == b);

    // Circle inverses exist only here.
    let q = eval("frac(x * y, z)");
    let qi = q.circ_inv();
    out += &format!("cinv({q}) = {qi}\n");
    assert_eq!(q.circ(&qi), Fraction::neutral());

    // ⋆-inverse of a fraction: (v ⋆ u⁻¹ ⋆ v) / v.
    out += &format!("inv({q}) = {}\n", q.star_inv());

    // Left brace distributivity, checked by cross-multiplication.
    let (c, d) = (eval("frac(y, x o x)"), eval("z * x"));
    let lhs = q.circ(&c.star(&d));
    let rhs = q.circ(&c).star(&q.star_inv()).star(&q.circ(&d));
    out += &format!("q o (c * d) == q o c * inv(q) * q o d: {}\n", lhs == rhs);

    let x = BracePoly::generator(gen("x"));
    out += &format!("iota(x) = {}\n", Fraction::from_wire(x));
    out
}

fn main() {
    print!("{}", run());
}
