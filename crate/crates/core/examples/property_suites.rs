//! Seeded property suites. Pass a suite name and optionally samples and seed:
//! `cargo run --example property_suites -- fractions 100 7`.

use freebrace::suites;

pub fn run(suite: &str, samples: usize, seed: u64) -> String {
    let report = suites::run(suite, samples, seed).unwrap();
    report.to_text()
}

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let suite = args.first().map_or("wire", String::as_str);
    let samples = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let seed = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(42);
    print!("{}", run(suite, samples, seed));
}
