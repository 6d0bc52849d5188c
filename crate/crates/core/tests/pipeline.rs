mod common;

use common::{family, q, qq, tz, CHEAP};
use critcurve::check::{compute_d_variant, run_check, NormalityCase};
use critcurve::critical::{fast_candidates, run_critical};
use critcurve::family::{build_gpair, translate_parameter};
use critcurve::implicit::{implicit_critical_set, implicit_surface, implicitize, ComplexityGuard};
use critcurve::parse::parse_family_str;
use critcurve::poly::{Polynomial, RationalFunction, Var};
use critcurve::realroots::{isolate_real_roots, AlgebraicNumber, RootSet};
use critcurve::reduce::reduce_critical_set;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

fn rationals(v: &[BigRational]) -> RootSet {
    v.iter().cloned().map(AlgebraicNumber::rational).collect()
}

fn z() -> Polynomial {
    Polynomial::var(Var::Z)
}

/// Same polynomial up to a nonzero constant factor.
fn proportional(a: &Polynomial, b: &Polynomial) -> bool {
    a.div_exact(b).is_some_and(|c| c.is_constant() && !c.is_zero())
}

#[test]
fn corpus_files_round_trip() {
    for name in ["cardioid", "ex2"].into_iter().chain((1..=12).map(|i| Box::leak(format!("family{i:02}").into_boxed_str()) as &str)) {
        let fam = family(name);
        let again = parse_family_str(&fam.to_spec_text()).unwrap();
        assert_eq!(again.u, fam.u, "{name}");
        assert_eq!(again.v, fam.v, "{name}");
    }
}

#[test]
fn degree_data() {
    let f10 = family("family10");
    assert_eq!((f10.m, f10.n, f10.r, f10.s), (2, 2, 2, 2));
    let c = family("cardioid");
    assert_eq!((c.m, c.n), (8, 8));
}

#[test]
fn cardioid_gcd_and_special_values() {
    let fam = family("cardioid");
    let gp = build_gpair(&fam).unwrap();
    let t_minus_s = &Polynomial::var(Var::T) - &Polynomial::var(Var::S);
    assert!(proportional(&gp.g, &t_minus_s));
    let zero = rationals(&[q(0)]);
    assert!(compute_d_variant(&gp, Var::S).unwrap().same_as(&zero));
    assert!(compute_d_variant(&gp, Var::T).unwrap().same_as(&zero));
    let chk = run_check(&fam, &mut rng()).unwrap();
    assert!(chk.h1_holds && chk.h2_holds);
    assert!(chk.spec().same_as(&zero));
    assert!(chk.spec2.is_empty());
    assert_eq!(chk.case, NormalityCase::Bounded);
    assert_eq!(chk.delta, Some(0));
    let cc = chk.crit_curve.unwrap();
    assert!(proportional(&cc.bstar, &(&z() * &cc.b)), "x coordinate of the critical curve is d");
    assert!(cc.dstar.is_zero());
}

#[test]
fn cardioid_cofactor_resultant_factors() {
    // C d (t^2+9)^44 (729d - 1053dt^2 - 117dt^4 + dt^6 + 3456t^3) (-32t + dt^2 + 9d)^2
    let fam = family("cardioid");
    let gp = build_gpair(&fam).unwrap();
    let res = gp.g1bar.resultant(&gp.g2bar, Var::S).unwrap();
    let sextic = tz(&[(729, 0, 1), (-1053, 2, 1), (-117, 4, 1), (1, 6, 1), (3456, 3, 0)]);
    let quad = tz(&[(-32, 1, 0), (1, 2, 1), (9, 0, 1)]);
    let expect = &(&(&z() * &tz(&[(1, 2, 0), (9, 0, 0)]).pow(44)) * &sextic) * &quad.pow(2);
    let c = res.div_exact(&expect).expect("displayed factorization divides").constant_value().expect("constant cofactor");
    assert!(c > q(0));
}

#[test]
fn cardioid_critical_set() {
    let fam = family("cardioid");
    let rep = run_critical(&run_check(&fam, &mut rng()).unwrap(), true).unwrap();
    // -+16/3, -+3 sqrt3, -+8 sqrt3/3, -+3 sqrt3/2, 0 and -+alpha, where the
    // quintic 729w^5 - 1215w^4 + 702w^3 - 18w^2 + 13w - 27 has its real root at
    // w = alpha^2/64, placing alpha between 3 sqrt3 and 16/3.
    let quintic = tz(&[(729, 0, 5), (-1215, 0, 4), (702, 0, 3), (-18, 0, 2), (13, 0, 1), (-27, 0, 0)]);
    let w = RationalFunction::from_poly(z().pow(2).scale_by(&qq(1, 64)));
    let alpha = quintic.substitute(&[(Var::Z, w)]).unwrap().num().clone();
    let factors = [
        tz(&[(9, 0, 2), (-256, 0, 0)]),
        tz(&[(1, 0, 2), (-27, 0, 0)]),
        tz(&[(3, 0, 2), (-64, 0, 0)]),
        tz(&[(4, 0, 2), (-27, 0, 0)]),
        z(),
        alpha,
    ];
    let product = factors.iter().fold(Polynomial::one(), |a, f| &a * f);
    let expect = isolate_real_roots(&product).unwrap();
    assert_eq!(expect.len(), 11);
    let (a, b, c) = (&expect.elems[0], &expect.elems[1], &expect.elems[2]);
    assert_eq!(a, &AlgebraicNumber::rational(qq(-16, 3)));
    assert!(critcurve::realroots::compare(a, b).is_lt() && critcurve::realroots::compare(b, c).is_lt());
    let minus_3_sqrt3 = AlgebraicNumber::from_isolating(&tz(&[(1, 0, 2), (-27, 0, 0)]), q(-6), q(-5)).unwrap();
    assert!(critcurve::realroots::compare(c, &minus_3_sqrt3).is_eq());
    assert!(rep.set.same_as(&expect), "got {:?}", rep.set.iter().map(|a| a.approx_decimal(6)).collect::<Vec<_>>());
    let fast = rep.fast.unwrap();
    assert!(fast.is_subset_of(&rep.set));
    let (_, imp) = critcurve::implicit::oracle(&fam, &ComplexityGuard::unlimited(), &mut rng()).unwrap();
    assert!(imp.same_as(&rep.set), "parametric and implicit sets coincide on the cardioid");
}

#[test]
fn cardioid_critical_curve_points_lie_on_the_surface() {
    let fam = family("cardioid");
    let chk = run_check(&fam, &mut rng()).unwrap();
    let cc = chk.crit_curve.unwrap();
    let f = implicitize(&fam).unwrap();
    for l0 in [qq(1, 3), q(2), qq(-7, 5), q(11), qq(5, 8)] {
        let at = |p: &Polynomial| p.eval(Var::Z, &l0).constant_value().unwrap();
        let (b, d) = (at(&cc.b), at(&cc.d));
        if b == q(0) || d == q(0) {
            continue;
        }
        let pt = [(Var::X, at(&cc.bstar) / b), (Var::Y, at(&cc.dstar) / d), (Var::Z, l0.clone())];
        assert_eq!(f.eval_all(&pt), q(0), "lambda = {l0}");
    }
}

#[test]
fn cardioid_properness_specializes() {
    let fam = family("cardioid");
    let gp = build_gpair(&fam).unwrap();
    for l0 in [q(1), q(-2), qq(3, 7), qq(-11, 4), q(5), qq(1, 9), q(-6), qq(13, 2), qq(-2, 5), q(17)] {
        let g = gp.g1.eval(Var::Z, &l0).gcd(&gp.g2.eval(Var::Z, &l0)).unwrap();
        assert_eq!(g.degree(Var::T), 1, "lambda = {l0}");
    }
}

#[test]
fn ex2_special_values_and_implicit_equation() {
    let fam = family("ex2");
    let chk = run_check(&fam, &mut rng()).unwrap();
    // lcoeff_t u = 11 - 95 d and lcoeff_t v = 18 + 34 d.
    let expect = rationals(&[qq(-9, 17), qq(11, 95)]);
    assert!(chk.spec1.same_as(&expect));
    let rep = run_critical(&chk, false).unwrap();
    assert!(rep.set.same_as(&expect));
    // Terms (c, x, y, d) of the displayed implicit equation.
    let displayed: [(i64, u32, u32, u32); 24] = [
        (1136239, 0, 0, 0), (-393995, 0, 0, 1), (-19629, 1, 0, 0), (-53165, 0, 1, 0),
        (202885, 1, 0, 1), (130530992, 0, 0, 3), (-1200232, 1, 0, 2), (374269, 0, 1, 1),
        (-2090, 0, 2, 1), (121, 0, 2, 0), (59360320, 0, 0, 4), (324, 2, 0, 0),
        (-396, 1, 1, 0), (-33513124, 0, 0, 2), (1156, 2, 0, 2), (1224, 2, 0, 1),
        (-688992, 0, 1, 2), (-1781936, 0, 1, 3), (9025, 0, 2, 2), (2672, 1, 1, 1),
        (6460, 1, 1, 2), (-146992, 1, 0, 3), (0, 0, 0, 0), (0, 0, 0, 0),
    ];
    let (x, y) = (Polynomial::var(Var::X), Polynomial::var(Var::Y));
    let expect = displayed.iter().fold(Polynomial::zero(), |acc, &(c, i, j, k)| {
        &acc + &(&Polynomial::integer(c) * &(&(&x.pow(i) * &y.pow(j)) * &z().pow(k)))
    });
    assert!(proportional(&implicitize(&fam).unwrap(), &expect));
    let (_, imp) = critcurve::implicit::oracle(&fam, &ComplexityGuard::default(), &mut rng()).unwrap();
    assert!(imp.same_as(&rationals(&[qq(11, 95)])));
}

#[test]
fn family_one_implicit_shape() {
    let f = implicitize(&family("family01")).unwrap();
    assert_eq!(f.degree(Var::X).max(f.degree(Var::Y)), 4);
    assert_eq!(f.nterms(), 95);
}

#[test]
fn implicit_equation_vanishes_on_the_parametrization() {
    for name in CHEAP {
        let fam = family(name);
        let f = implicitize(&fam).unwrap();
        let r = f.substitute(&[(Var::X, fam.u.clone()), (Var::Y, fam.v.clone())]).unwrap();
        assert!(r.is_zero(), "{name}");
    }
}

#[test]
fn fast_candidates_lie_in_the_critical_set() {
    for name in CHEAP {
        let rep = run_critical(&run_check(&family(name), &mut rng()).unwrap(), false).unwrap();
        assert!(fast_candidates(&rep.projection).unwrap().is_subset_of(&rep.set), "{name}");
    }
}

#[test]
fn reduction_keeps_a_subset() {
    for name in ["cardioid", "ex2", "family10"] {
        let fam = family(name);
        let rep = run_critical(&run_check(&fam, &mut rng()).unwrap(), false).unwrap();
        let red = reduce_critical_set(&fam, &rep.set, 2, &mut rng()).unwrap();
        assert!(red.set.is_subset_of(&rep.set), "{name}");
        assert_eq!(red.shears.len(), 2);
    }
}

#[test]
fn translation_shifts_the_critical_set() {
    for (name, c) in [("cardioid", qq(3, 2)), ("ex2", q(-4)), ("family08", qq(1, 3)), ("family10", qq(-5, 7)), ("family11", q(2))] {
        let fam = family(name);
        let base = run_critical(&run_check(&fam, &mut rng()).unwrap(), false).unwrap().set;
        let moved = translate_parameter(&fam, &c).unwrap();
        let got = run_critical(&run_check(&moved, &mut rng()).unwrap(), false).unwrap().set;
        assert!(got.same_as(&base.translate(&c)), "{name}");
    }
}

#[test]
fn parabola_translates_have_one_topology_type() {
    let fam = parse_family_str("param: L\nu = t\nv = t^2 + L\n").unwrap();
    let chk = run_check(&fam, &mut rng()).unwrap();
    assert!(!chk.h2_holds || chk.shear_applied.is_some());
    assert!(chk.shear_applied.is_some());
    let rep = run_critical(&chk, false).unwrap();
    assert!(rep.set.is_empty());
    let s = implicit_surface(&chk.family, &ComplexityGuard::default()).unwrap();
    assert!(implicit_critical_set(&s).unwrap().is_empty());
}

#[test]
fn circle_family_changes_only_at_zero() {
    let u = parse_family_str("param: L\nu = L*(1-t^2)/(1+t^2)\nv = 2*L*t/(1+t^2)\n").unwrap();
    let rep = run_critical(&run_check(&u, &mut rng()).unwrap(), false).unwrap();
    assert!(rep.a1.is_subset_of(&rationals(&[q(0)])));
    assert!(rep.set.contains(&AlgebraicNumber::integer(0)));
}

fn cardioid_signature(d: BigRational) -> critcurve::sample::TopologySignature {
    use critcurve::sample::{poles, sample_curve, topology_signature, SampleOptions};
    let fam = family("cardioid");
    let opts = SampleOptions::default();
    let pts = sample_curve(&fam, &d, &opts);
    topology_signature(&pts, &poles(&fam, &d), &opts.snap)
}

#[test]
fn cardioid_offsets_in_one_cell_look_alike() {
    let sigs: Vec<_> = [q(1), q(3), qq(22, 5)].into_iter().map(cardioid_signature).collect();
    assert!(sigs.iter().all(|s| *s == sigs[0]), "{sigs:?}");
    assert_eq!((sigs[0].components, sigs[0].self_intersections), (1, 1));
}

#[test]
fn large_cardioid_offsets_gain_two_crossings() {
    // One crossing on the axis above the origin exists for every d > 0; past
    // 3 sqrt3 two more appear near the lower singularity.
    for d in [qq(26, 5), qq(21, 4)] {
        let s = cardioid_signature(d.clone());
        assert_eq!((s.components, s.self_intersections), (1, 3), "d = {d}");
    }
}
