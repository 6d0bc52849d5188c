//! Prints the critical set of a family file: `cargo run --example critical_set -- FILE [SEED]`.

use std::time::Instant;

use critcurve::critical::critical_set;
use critcurve::parse::parse_family;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let mut args = std::env::args().skip(1);
    let path = args.next().expect("usage: critical_set FILE [SEED]");
    let seed: u64 = args.next().map(|s| s.parse().expect("seed")).unwrap_or(0);
    let fam = parse_family(path.as_ref()).unwrap_or_else(|e| panic!("{e}"));
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rep = critical_set(&fam, &mut rng).unwrap_or_else(|e| panic!("{e}"));
    println!("size {} in {:.2?}", rep.set.len(), start.elapsed());
    for (a, p) in rep.set.iter().zip(&rep.provenance) {
        let tags: Vec<&str> = p.iter().map(|t| t.label()).collect();
        println!("  {:>24}  {}  {}", a.approx_decimal(10), tags.join(","), a);
    }
}
