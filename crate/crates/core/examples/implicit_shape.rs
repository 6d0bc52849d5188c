//! Shape of the implicit equation: `cargo run --example implicit_shape -- FILE...`.

use critcurve::implicit::implicitize;
use critcurve::parse::parse_family;
use critcurve::poly::Var;

fn main() {
    for path in std::env::args().skip(1) {
        let fam = parse_family(path.as_ref()).unwrap();
        let f = implicitize(&fam).unwrap();
        let xy = f.degree(Var::X).max(f.degree(Var::Y));
        println!("{path}: terms {} total degree {} xy-degree {}", f.nterms(), f.total_degree(), xy);
    }
}
