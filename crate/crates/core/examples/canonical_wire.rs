//! Normal forms in the canonical wire: polynomials in `t[x]` over the group
//! ring with `eval_1 = 1` and `eval_X` a group element.

use freebrace::expr::parse_expr;
use freebrace::{gen, BracePoly};

pub fn run() -> String {
    let mut out = String::new();
    let (x, y) = (BracePoly::generator(gen("x")), BracePoly::generator(gen("y")));

    out += &format!("x * y     = {}\n", x.star(&y));
    out += &format!("y * x     = {}\n", y.star(&x));
    out += &format!("x o y     = {}\n", x.circ(&y));
    out += &format!("inv(x)    = {}\n", x.star_inv());
    out += &format!("dot(x, y) = {}\n", x.dot(&y));
    out += &format!("lambda_x(y) = {}\n", x.lambda(&y));

    // The same element, reached through the expression language.
    let e = parse_expr("inv(x) * (x o y) * inv(y)").unwrap();
    assert_eq!(e.eval_canonical(), x.dot(&y));

    let f = parse_expr("(x * y) o inv(z)").unwrap().eval_canonical();
    out += &format!(
        "(x * y) o inv(z) = {f}\n  eval_X = {}\n  eval_1 = {}\n",
        f.eval_x(),
        f.eval_1()
    );
    out
}

fn main() {
    print!("{}", run());
}
