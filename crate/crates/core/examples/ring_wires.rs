//! Right wires inside rings of upper-triangular matrices over `ℤ/m`, built
//! from a pair of endomorphisms `(p, π)`.

use freebrace::ring_wires::{builtin, check_conditions, Subgroup, Sweep, WireInstance};

pub fn run() -> String {
    let mut out = String::new();
    let (ring, spec) = builtin("indicator_diag", 2, 2, &[1]).unwrap();
    let (g, h) = (Subgroup::trivial(&ring), Subgroup::trivial(&ring));

    let conditions = check_conditions(&ring, &spec, &g, &h, Sweep::Exhaustive);
    out += &conditions.to_table();

    let wire = WireInstance::new(ring, spec, g, h);
    out += &format!("carrier: {:?}\n", wire.carrier);
    let (u, v) = (&wire.carrier[1], &wire.carrier[2]);
    out += &format!("{u} * {v} = {}\n", wire.star(u, v));
    out += &format!("inv({u}) = {}\n", wire.inv_star(u).unwrap());

    let report = wire.verify(Sweep::Exhaustive);
    out += &report.to_table();
    out += &format!("right wire: {}\n", report.passed());

    // With both endomorphisms trivial the star is the twisted addition u - 1 + v.
    let (r3, twisted) = builtin("trivial_both", 2, 3, &[]).unwrap();
    let a = r3.matrix(&[&[2, 1], &[0, 0]]).unwrap();
    let b = r3.matrix(&[&[1, 2], &[0, 2]]).unwrap();
    out += &format!("trivial_both: {a} * {b} = {}\n", twisted.star(&r3, &a, &b));
    out
}

fn main() {
    print!("{}", run());
}
