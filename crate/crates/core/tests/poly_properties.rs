mod common;

use common::{bareiss_det, q, sylvester_matrix};
use critcurve::poly::{Polynomial, RationalFunction, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

/// Random polynomial in the given variables with total degree at most `deg`.
fn poly_in(vars: &'static [Var], deg: u32, max_terms: usize) -> impl Strategy<Value = Polynomial> {
    let n = vars.len();
    prop::collection::vec((-9i64..=9, prop::collection::vec(0..=deg, n)), 1..=max_terms).prop_map(move |terms| {
        let mut p = Polynomial::zero();
        for (c, exps) in terms {
            if exps.iter().sum::<u32>() > deg {
                continue;
            }
            let mut m = Polynomial::integer(c);
            for (v, e) in vars.iter().zip(exps) {
                m = &m * &Polynomial::var(*v).pow(e);
            }
            p = &p + &m;
        }
        p
    })
}

const TZ: &[Var] = &[Var::T, Var::Z];
const XYZ: &[Var] = &[Var::X, Var::Y, Var::Z];

fn int_coeffs(p: &Polynomial, v: Var) -> Vec<BigInt> {
    (0..=p.degree(v))
        .map(|k| {
            let c = p.coeff_in(v, k).constant_value().unwrap_or_else(BigRational::zero);
            assert!(c.is_integer());
            c.to_integer()
        })
        .collect()
}

fn same_rf(a: &RationalFunction, b: &RationalFunction) -> bool {
    (a.num() * b.den()) == (b.num() * a.den())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn resultant_matches_sylvester_determinant(
        p in poly_in(TZ, 4, 8),
        r in poly_in(TZ, 4, 8),
        z0 in -6i64..=6,
    ) {
        prop_assume!(p.degree(Var::T) > 0 && r.degree(Var::T) > 0);
        let res = p.resultant(&r, Var::T).unwrap();
        let pz = p.eval(Var::Z, &q(z0));
        let rz = r.eval(Var::Z, &q(z0));
        // Specialization commutes with the resultant only when no leading coefficient drops.
        prop_assume!(pz.degree(Var::T) == p.degree(Var::T) && rz.degree(Var::T) == r.degree(Var::T));
        let expect = bareiss_det(sylvester_matrix(&int_coeffs(&pz, Var::T), &int_coeffs(&rz, Var::T)));
        let got = res.eval(Var::Z, &q(z0)).constant_value().unwrap_or_else(BigRational::zero);
        prop_assert_eq!(got, BigRational::from_integer(expect));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gcd_divides_and_cofactors_are_coprime(
        g in poly_in(TZ, 2, 4),
        a in poly_in(TZ, 2, 4),
        b in poly_in(TZ, 2, 4),
    ) {
        prop_assume!(!g.is_zero() && !a.is_zero() && !b.is_zero());
        let (p, r) = (&g * &a, &g * &b);
        let (d, pbar, rbar) = p.gcd_cofactors(&r).unwrap();
        prop_assert_eq!(&(&d * &pbar), &p);
        prop_assert_eq!(&(&d * &rbar), &r);
        prop_assert!(d.div_exact(&g).is_some(), "planted factor lost");
        if pbar.degree(Var::T) > 0 && rbar.degree(Var::T) > 0 {
            prop_assert!(!pbar.resultant(&rbar, Var::T).unwrap().is_zero());
        }
    }

    #[test]
    fn squarefree_part_is_squarefree(a in poly_in(TZ, 2, 4), b in poly_in(TZ, 2, 4)) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        let p = &(&a * &a) * &b;
        let s = p.squarefree_part().unwrap();
        prop_assert!(p.div_exact(&s).is_some());
        // A square-free polynomial shares with its w-derivative only factors free
        // of w, so gcd(s, s_t, s_z) is constant.
        let mut g = s.clone();
        for w in [Var::T, Var::Z] {
            if s.depends_on(w) {
                let gw = s.gcd(&s.derivative(w)).unwrap();
                prop_assert!(!gw.depends_on(w));
                g = g.gcd(&s.derivative(w)).unwrap();
            }
        }
        prop_assert!(s.is_constant() || g.is_constant());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        p in poly_in(XYZ, 3, 5),
        r in poly_in(XYZ, 3, 5),
        num in poly_in(TZ, 2, 3),
        den in poly_in(TZ, 2, 3),
    ) {
        prop_assume!(!den.is_zero());
        let b = RationalFunction::new(num, den).unwrap();
        let sigma = |f: &Polynomial| f.substitute(&[(Var::X, b.clone())]).unwrap();
        prop_assert!(same_rf(&sigma(&(&p * &r)), &sigma(&p).mul(&sigma(&r))));
        prop_assert!(same_rf(&sigma(&(&p + &r)), &sigma(&p).add(&sigma(&r))));
    }

    /// gcd commutes with specializing the parameter away from finitely many bad values.
    #[test]
    fn gcd_commutes_with_generic_specialization(
        g in poly_in(XYZ, 1, 4),
        a in poly_in(XYZ, 2, 4),
        b in poly_in(XYZ, 2, 4),
        seeds in prop::collection::vec((-40i64..=40, 1i64..=7), 20),
    ) {
        let (f, h) = (&g * &a, &g * &b);
        prop_assume!(!f.is_zero() && !h.is_zero() && f.depends_on(Var::X) && h.depends_on(Var::X));
        let (d, fbar, hbar) = f.gcd_cofactors(&h).unwrap();
        for (n, m) in seeds {
            let a0 = BigRational::new(n.into(), m.into());
            let at = |p: &Polynomial| p.eval(Var::Z, &a0);
            // The bad set: a leading coefficient in x or y vanishes, or a
            // cofactor resultant in x or y vanishes identically.
            let drops = [Var::X, Var::Y].iter().any(|&v| {
                at(&f).degree(v) < f.degree(v) || at(&h).degree(v) < h.degree(v)
            });
            let res_vanish = [Var::X, Var::Y].iter().any(|&v| {
                let res = fbar.resultant(&hbar, v).unwrap();
                at(&res).is_zero()
            });
            if drops || res_vanish {
                continue;
            }
            let lhs = at(&f).gcd(&at(&h)).unwrap();
            let rhs = at(&d);
            prop_assert!(lhs.div_exact(&rhs).is_some_and(|c| c.is_constant()), "at {a0}: {lhs} vs {rhs}");
        }
    }
}
