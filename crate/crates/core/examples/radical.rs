//! Augmenting coefficients sends the canonical wire onto integer polynomials
//! with coefficient sum 1, where `⋆` becomes `f + g - 1` and `∘` the product.

use freebrace::expr::parse_expr;
use freebrace::RadicalPoly;

pub fn run() -> String {
    let mut out = String::new();
    for s in ["x * y", "y * x", "inv(x) * (x o y) * inv(y)", "(x * y) o inv(z)"] {
        let f = parse_expr(s).unwrap().eval_canonical();
        let r = RadicalPoly::project(&f);
        out += &format!("{s:<28} -> {r:<24} shifted: {}\n", r.shift());
    }
    // ⋆ is commutative after projection even though it is not before.
    let xy = RadicalPoly::project(&parse_expr("x * y").unwrap().eval_canonical());
    let yx = RadicalPoly::project(&parse_expr("y * x").unwrap().eval_canonical());
    assert_eq!(xy, yx);
    out
}

fn main() {
    print!("{}", run());
}
