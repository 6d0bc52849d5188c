//! Per-stage timings of the critical set computation: `cargo run --example stages -- FILE`.

use std::time::Instant;

use critcurve::check::run_check;
use critcurve::parse::parse_family;
use critcurve::poly::{Polynomial, Var};
use critcurve::realroots::isolate_real_roots;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shape(p: &Polynomial) -> String {
    let degs: Vec<String> = Var::ALL.iter().filter(|v| p.depends_on(**v)).map(|v| format!("{v}{}", p.degree(*v))).collect();
    format!("[{} terms, {} bits, {}]", p.nterms(), p.primitive_z().max_bits(), degs.join(" "))
}

fn main() {
    let path = std::env::args().nth(1).expect("usage: stages FILE");
    let fam = parse_family(path.as_ref()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let clock = Instant::now();
    let lap = |what: &str, p: &Polynomial| println!("{:>8.2?} {what} {}", clock.elapsed(), shape(p));
    let check = run_check(&fam, &mut rng).unwrap();
    let fam = &check.family;
    let gp = &check.gpair;
    lap("check done, G1bar", &gp.g1bar);
    let res = gp.g1bar.resultant(&gp.g2bar, Var::S).unwrap();
    lap("Res_s", &res);
    let j = res.squarefree_part().unwrap();
    lap("j", &j);
    let ut = &(&fam.x11.derivative(Var::T) * &fam.x12) - &(&fam.x11 * &fam.x12.derivative(Var::T));
    let h = ut.squarefree_part().unwrap();
    lap("h", &h);
    let f = &(&Polynomial::var(Var::X) * &fam.x12) - &fam.x11;
    for (name, q) in [("m1", &h), ("m2", &j)] {
        let r = f.resultant(q, Var::T).unwrap();
        lap(&format!("Res_t(f, {name})"), &r);
        let m = r.squarefree_part().unwrap();
        lap(name, &m);
        if m.degree(Var::X) > 0 {
            let d = m.discriminant(Var::X).unwrap();
            lap(&format!("D_x({name})"), &d);
            let roots = isolate_real_roots(&d).unwrap();
            println!("{:>8.2?} roots: {}", clock.elapsed(), roots.len());
        }
    }
}
