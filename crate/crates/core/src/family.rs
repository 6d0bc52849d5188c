//! One-parameter families `x = u(t, z)`, `y = v(t, z)` of rational curves.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use crate::error::{Error, Result};
use crate::poly::{Names, Polynomial, RationalFunction, Var, DEFAULT_NAMES};
use crate::realroots::{isolate_real_roots, merge, RootSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParametrizedFamily {
    /// Name of the parameter in the input; internally it is always `z`.
    pub param: String,
    pub u: RationalFunction,
    pub v: RationalFunction,
    pub x11: Polynomial,
    pub x12: Polynomial,
    pub x21: Polynomial,
    pub x22: Polynomial,
    pub m: u32,
    pub n: u32,
    pub r: u32,
    pub s: u32,
    pub a: Polynomial,
    pub bstar: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    pub dstar: Polynomial,
    pub d: Polynomial,
    /// Parameter values at which a denominator vanishes identically in `t`.
    pub degenerate: RootSet,
}

/// `G1 = X11(t) X12(s) - X12(t) X11(s)`, `G2` likewise, their gcd and cofactors.
#[derive(Clone, Debug)]
pub struct GPair {
    pub g1: Polynomial,
    pub g2: Polynomial,
    pub g: Polynomial,
    pub g1bar: Polynomial,
    pub g2bar: Polynomial,
}

fn only_t_and_z(p: &Polynomial) -> bool {
    p.vars().iter().all(|v| v == Var::T || v == Var::Z)
}

impl ParametrizedFamily {
    pub fn names(&self) -> Names<'_> {
        let mut n = DEFAULT_NAMES;
        n[Var::Z.index()] = &self.param;
        n
    }

    /// The family in the input file format.
    pub fn to_spec_text(&self) -> String {
        let names = self.names();
        format!(
            "param: {}\nu = {}\nv = {}\n",
            self.param,
            self.u.display_with(&names),
            self.v.display_with(&names)
        )
    }
}

pub fn build_family(u: RationalFunction, v: RationalFunction) -> Result<ParametrizedFamily> {
    build_family_named("lambda", u, v)
}

pub fn build_family_named(param: &str, u: RationalFunction, v: RationalFunction) -> Result<ParametrizedFamily> {
    for (name, f) in [("u", &u), ("v", &v)] {
        if f.den().is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if f.is_zero() {
            return Err(Error::InvalidFamily(format!("{name} is identically zero")));
        }
        if !only_t_and_z(f.num()) || !only_t_and_z(f.den()) {
            return Err(Error::InvalidFamily(format!("{name} may only involve t and the parameter")));
        }
    }
    if !u.depends_on(Var::T) {
        return Err(Error::InvalidFamily("u does not depend on t; every curve is a vertical line".into()));
    }
    let x11 = u.num().clone();
    let x12 = u.den().clone();
    let x21 = v.num().clone();
    let x22 = v.den().clone();
    let (m, n, r, s) = (x11.degree(Var::T), x12.degree(Var::T), x21.degree(Var::T), x22.degree(Var::T));
    let a = x11.coeff_in(Var::T, m);
    let bstar = x11.coeff_in(Var::T, n);
    let b = x12.coeff_in(Var::T, n);
    let c = x21.coeff_in(Var::T, r);
    let dstar = x21.coeff_in(Var::T, s);
    let d = x22.coeff_in(Var::T, s);
    let (c12, _) = x12.content_primitive(Var::T)?;
    let (c22, _) = x22.content_primitive(Var::T)?;
    let degenerate = merge(&[&isolate_real_roots(&c12)?, &isolate_real_roots(&c22)?]);
    Ok(ParametrizedFamily {
        param: param.to_string(),
        u,
        v,
        x11,
        x12,
        x21,
        x22,
        m,
        n,
        r,
        s,
        a,
        bstar,
        b,
        c,
        dstar,
        d,
        degenerate,
    })
}

fn swap_ts(p: &Polynomial) -> Polynomial {
    p.rename(&[(Var::T, Var::S), (Var::S, Var::T)])
}

pub fn antisymmetric_pair(num: &Polynomial, den: &Polynomial) -> Polynomial {
    &(num * &swap_ts(den)) - &(den * &swap_ts(num))
}

pub fn build_gpair(fam: &ParametrizedFamily) -> Result<GPair> {
    let g1 = antisymmetric_pair(&fam.x11, &fam.x12);
    let g2 = antisymmetric_pair(&fam.x21, &fam.x22);
    if swap_ts(&g1) != -&g1 || swap_ts(&g2) != -&g2 {
        return Err(Error::Internal("G1, G2 must be antisymmetric in t, s".into()));
    }
    let (g, g1bar, g2bar) = g1.gcd_cofactors(&g2)?;
    Ok(GPair { g1, g2, g, g1bar, g2bar })
}

/// The family `(u + mu0 v, v)`.
pub fn shear(fam: &ParametrizedFamily, mu0: &BigRational) -> Result<ParametrizedFamily> {
    let u = fam.u.add(&fam.v.scale_by(mu0));
    build_family_named(&fam.param, u, fam.v.clone())
}

/// Replaces the parameter `z` by `z - c`; the critical set moves right by `c`.
pub fn translate_parameter(fam: &ParametrizedFamily, c: &BigRational) -> Result<ParametrizedFamily> {
    let sub = [(
        Var::Z,
        RationalFunction::from_poly(&Polynomial::var(Var::Z) - &Polynomial::constant(c.clone())),
    )];
    build_family_named(&fam.param, fam.u.substitute(&sub)?, fam.v.substitute(&sub)?)
}

/// Nonzero integer drawn uniformly from `[-10^6, 10^6]`.
pub fn draw_mu<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let k: i64 = rng.gen_range(-1_000_000..=1_000_000);
        if k != 0 {
            return BigRational::from_integer(BigInt::from(k));
        }
    }
}

fn degree_in_t(f: &RationalFunction) -> u32 {
    f.degree(Var::T)
}

/// `deg_t(u - mu0 v)` at `z = lambda0`, confirmed by a second random `mu`.
pub fn curve_degree<R: Rng>(
    fam: &ParametrizedFamily,
    lambda0: &BigRational,
    mu0: &BigRational,
    rng: &mut R,
) -> Result<u32> {
    let u0 = fam.u.eval(Var::Z, lambda0)?;
    let v0 = fam.v.eval(Var::Z, lambda0)?;
    if u0.is_zero() {
        return Err(Error::Degenerate("u vanishes at this parameter value".into()));
    }
    let deg = |mu: &BigRational| degree_in_t(&u0.sub(&v0.scale_by(mu)));
    let mut first = mu0.clone();
    for _ in 0..3 {
        let d1 = deg(&first);
        let d2 = deg(&draw_mu(rng));
        if d1 == d2 {
            return Ok(d1);
        }
        first = draw_mu(rng);
    }
    Err(Error::Hypothesis("curve degree unstable under three pairs of random shears".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t() -> Polynomial {
        Polynomial::var(Var::T)
    }
    fn z() -> Polynomial {
        Polynomial::var(Var::Z)
    }
    fn rf(p: Polynomial) -> RationalFunction {
        RationalFunction::from_poly(p)
    }
    fn q(a: i64) -> BigRational {
        BigRational::from_integer(a.into())
    }

    fn parabola() -> ParametrizedFamily {
        build_family(rf(t()), rf(&t().pow(2) + &z())).unwrap()
    }

    #[test]
    fn parabola_gpair() {
        let g = build_gpair(&parabola()).unwrap();
        let s = Polynomial::var(Var::S);
        assert_eq!(g.g, (&t() - &s).squarefree_part().unwrap());
        assert!(g.g1bar.is_constant());
        assert_eq!(g.g2bar.squarefree_part().unwrap(), (&t() + &s).squarefree_part().unwrap());
    }

    #[test]
    fn shear_and_back() {
        let f = parabola();
        let sh = shear(&f, &q(1)).unwrap();
        assert_eq!(sh.u, rf(&(&t() + &t().pow(2)) + &z()));
        assert_eq!(sh.s, f.s);
        assert_eq!(shear(&sh, &q(-1)).unwrap(), f);
    }

    #[test]
    fn rejects_u_without_t() {
        assert!(build_family(rf(z()), rf(t())).is_err());
        assert!(build_family(RationalFunction::zero(), rf(t())).is_err());
    }

    #[test]
    fn reduced_before_caching() {
        let den = &t().pow(2) + &Polynomial::integer(1);
        let u = RationalFunction::new(&den * &t(), den).unwrap();
        let f = build_family(u, rf(t())).unwrap();
        assert_eq!(f.x11, t());
        assert_eq!(f.x12, Polynomial::one());
    }

    #[test]
    fn line_and_circle_degrees() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let line = build_family(rf(t()), rf(t())).unwrap();
        assert_eq!(curve_degree(&line, &q(0), &q(3), &mut rng).unwrap(), 1);
        let one = Polynomial::integer(1);
        let den = &t().pow(2) + &one;
        let u = RationalFunction::new(&z() * &(&one - &t().pow(2)), den.clone()).unwrap();
        let v = RationalFunction::new(&(&Polynomial::integer(2) * &z()) * &t(), den).unwrap();
        let circle = build_family(u, v).unwrap();
        assert_eq!(curve_degree(&circle, &q(1), &q(5), &mut rng).unwrap(), 2);
    }
}
