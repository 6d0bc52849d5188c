mod common;

use std::cmp::Ordering;

use common::{cauchy_bound, dense, sturm_count};
use critcurve::poly::{Polynomial, Var};
use critcurve::realroots::{compare, isolate_real_roots, merge, pick_representatives, AlgebraicNumber, RootSet};
use num_rational::BigRational;
use proptest::prelude::*;

fn upoly(coeffs: &[i64]) -> Polynomial {
    let z = Polynomial::var(Var::Z);
    coeffs.iter().enumerate().fold(Polynomial::zero(), |acc, (i, &c)| &acc + &(&Polynomial::integer(c) * &z.pow(i as u32)))
}

/// Random univariate polynomial, sometimes with a repeated factor.
fn poly_z() -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(-12i64..=12, 2..=7), prop::collection::vec(-3i64..=3, 0..=3), 1u32..=3).prop_map(
        |(a, b, e)| {
            let p = upoly(&a);
            let r = upoly(&b);
            if r.is_zero() || r.is_constant() {
                p
            } else {
                &p * &r.pow(e)
            }
        },
    )
}

fn root_set() -> impl Strategy<Value = RootSet> {
    poly_z().prop_filter_map("constant", |p| {
        if p.is_zero() || p.is_constant() {
            None
        } else {
            isolate_real_roots(&p).ok()
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn isolation_agrees_with_sturm(p in poly_z()) {
        prop_assume!(!p.is_zero() && !p.is_constant());
        let roots = isolate_real_roots(&p).unwrap();
        let c = dense(&p, Var::Z);
        let b = cauchy_bound(&c);
        prop_assert_eq!(roots.len(), sturm_count(&c, &-b.clone(), &b));
        for a in roots.iter() {
            if let AlgebraicNumber::Algebraic(r) = a {
                let (lo, hi) = r.interval();
                let dp = dense(&Polynomial::from_zpoly(r.defpoly().to_zpoly(Var::Z)), Var::Z);
                prop_assert_eq!(sturm_count(&dp, lo, hi), 1, "interval does not isolate");
                prop_assert_eq!(sturm_count(&c, lo, hi), 1);
            }
        }
    }

    #[test]
    fn compare_is_a_total_order(a in root_set(), b in root_set(), c in root_set()) {
        let all: Vec<&AlgebraicNumber> = a.iter().chain(b.iter()).chain(c.iter()).collect();
        for x in &all {
            prop_assert_eq!(compare(x, x), Ordering::Equal);
            for y in &all {
                prop_assert_eq!(compare(x, y), compare(y, x).reverse());
                for z in &all {
                    if compare(x, y) != Ordering::Greater && compare(y, z) != Ordering::Greater {
                        prop_assert_ne!(compare(x, z), Ordering::Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn merge_laws(a in root_set(), b in root_set(), c in root_set()) {
        prop_assert!(merge(&[&a, &a]).same_as(&a));
        prop_assert!(merge(&[&a, &b]).same_as(&merge(&[&b, &a])));
        let left = merge(&[&merge(&[&a, &b]), &c]);
        let right = merge(&[&a, &merge(&[&b, &c])]);
        prop_assert!(left.same_as(&right));
        let m = merge(&[&a, &b]);
        prop_assert!(m.elems.windows(2).all(|w| compare(&w[0], &w[1]) == Ordering::Less));
    }

    #[test]
    fn representatives_separate_the_roots(s in root_set()) {
        let reps = pick_representatives(&s);
        prop_assert_eq!(reps.len(), 2 * s.len() + 1);
        for (k, r) in reps.iter().enumerate() {
            let v = AlgebraicNumber::rational(r.value.clone());
            if k % 2 == 0 {
                prop_assert!(!r.at_root);
                let i = k / 2;
                if i > 0 {
                    prop_assert_eq!(compare(&s.elems[i - 1], &v), Ordering::Less);
                }
                if i < s.len() {
                    prop_assert_eq!(compare(&v, &s.elems[i]), Ordering::Less);
                }
            } else {
                prop_assert!(r.at_root);
                let root = &s.elems[k / 2];
                let lo = AlgebraicNumber::rational(&r.value - &r.offset);
                let hi = AlgebraicNumber::rational(&r.value + &r.offset);
                prop_assert_ne!(compare(&lo, root), Ordering::Greater);
                prop_assert_ne!(compare(root, &hi), Ordering::Greater);
            }
        }
    }
}

#[test]
fn sturm_oracle_counts_known_roots() {
    // (z^2 - 2)(z - 1)^2 (z^2 + 1): real roots -sqrt 2, 1, sqrt 2.
    let p = &(&upoly(&[-2, 0, 1]) * &upoly(&[-1, 1]).pow(2)) * &upoly(&[1, 0, 1]);
    let c = dense(&p, Var::Z);
    let b = cauchy_bound(&c);
    assert_eq!(sturm_count(&c, &-b.clone(), &b), 3);
    assert_eq!(sturm_count(&c, &BigRational::from_integer(0.into()), &b), 2);
    assert_eq!(isolate_real_roots(&p).unwrap().len(), 3);
}
