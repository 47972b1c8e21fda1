//! Arithmetic in the integral group ring of the free commutative group.
//!
//! Run with `cargo run --example group_ring`.

use freebrace::notation::parse_group_ring;
use freebrace::{gen, GroupElt, GroupRingElt};

pub fn run() -> String {
    let mut out = String::new();
    let f = parse_group_ring("2 - x^-1").unwrap();
    let g = parse_group_ring("1 + x y - 3*y^2").unwrap();
    let fg = &f * &g;
    out += &format!("f = {f}\ng = {g}\nf*g = {fg}\n");

    // The initial term is the largest support element; it is multiplicative,
    // which is why the group ring has no zero divisors.
    let (a, b) = (f.initial().unwrap(), g.initial().unwrap());
    out += &format!("in(f) = {a}, in(g) = {b}, in(f*g) = {}\n", fg.initial().unwrap());
    assert_eq!(fg.initial().unwrap(), &(a * b));

    out += &format!("augmentation(f*g) = {}\n", fg.augment());
    let x = GroupElt::generator(gen("x"));
    out += &format!("x*f = {}\n", f.translate(&x));
    out += &format!(
        "json: {}\n",
        serde_json::to_string(&GroupRingElt::from_group(x.pow(-2))).unwrap()
    );
    out
}

fn main() {
    print!("{}", run());
}
