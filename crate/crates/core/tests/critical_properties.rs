mod common;

use critcurve::check::run_check;
use critcurve::critical::run_critical;
use critcurve::family::build_family;
use critcurve::poly::{Polynomial, RationalFunction, Var};
use critcurve::realroots::isolate_real_roots;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `sum_i (a_i + b_i z) t^i`, a polynomial of degree at most 3 in `t`.
fn coord() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-6i64..=6, -6i64..=6), 2..=4).prop_map(|c| {
        let (t, z) = (Polynomial::var(Var::T), Polynomial::var(Var::Z));
        c.iter().enumerate().fold(Polynomial::zero(), |acc, (i, &(a, b))| {
            let k = &Polynomial::integer(a) + &(&Polynomial::integer(b) * &z);
            &acc + &(&k * &t.pow(i as u32))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// z-values of singular points of m = m1bar m2bar gcd(m1, m2) lie in the critical set.
    #[test]
    fn singular_points_of_the_projection_are_critical(u in coord(), v in coord()) {
        prop_assume!(u.degree(Var::T) >= 2 && v.degree(Var::T) >= 1);
        let Ok(fam) = build_family(RationalFunction::from_poly(u), RationalFunction::from_poly(v)) else {
            return Ok(());
        };
        let Ok(chk) = run_check(&fam, &mut ChaCha8Rng::seed_from_u64(1)) else {
            return Ok(());
        };
        let rep = run_critical(&chk, false).unwrap();
        let p = &rep.projection;
        let (g, _, _) = p.m1.gcd_cofactors(&p.m2).unwrap();
        let m = &(&p.m1bar * &p.m2bar) * &g;
        prop_assume!(m.degree(Var::X) > 0);
        let rx = m.resultant(&m.derivative(Var::X), Var::X).unwrap();
        let rz = m.resultant(&m.derivative(Var::Z), Var::X).unwrap();
        // Every singular point satisfies m = m_x = m_z = 0, so its z is a common root.
        let common = rx.gcd(&rz).unwrap();
        if common.depends_on(Var::Z) {
            let zs = isolate_real_roots(&common).unwrap();
            prop_assert!(zs.is_subset_of(&rep.set));
        }
    }
}
