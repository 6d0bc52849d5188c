//! Properness and normality hypotheses, and the special parameter values.

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, Result};
use crate::family::{build_gpair, draw_mu, shear, GPair, ParametrizedFamily};
use crate::poly::{Polynomial, Var};
use crate::realroots::{isolate_real_roots, merge, RootSet};

pub const MAX_SHEARS: usize = 5;

/// Which of `u`, `v` has a pole at `t = infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalityCase {
    /// `m > n` and `r > s`.
    BothUnbounded,
    /// `m > n`, `r <= s`.
    XUnbounded,
    /// `r > s`, `m <= n`.
    YUnbounded,
    /// `m <= n`, `r <= s`.
    Bounded,
}

impl NormalityCase {
    pub fn label(self) -> &'static str {
        match self {
            NormalityCase::BothUnbounded => "both-unbounded",
            NormalityCase::XUnbounded => "x-unbounded",
            NormalityCase::YUnbounded => "y-unbounded",
            NormalityCase::Bounded => "bounded",
        }
    }
}

/// The curve `(b*(z)/b(z), d*(z)/d(z), z)` traced by the limit point at `t = infinity`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CritCurve {
    pub bstar: Polynomial,
    pub b: Polynomial,
    pub dstar: Polynomial,
    pub d: Polynomial,
}

#[derive(Clone, Debug)]
pub struct Normality {
    pub case: NormalityCase,
    pub delta: Option<u32>,
    pub spec3: RootSet,
    pub crit_curve: Option<CritCurve>,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    /// The family the later stages run on (sheared if H2 failed).
    pub family: ParametrizedFamily,
    pub gpair: GPair,
    pub h1_holds: bool,
    pub h2_holds: bool,
    pub spec0: RootSet,
    pub spec1: RootSet,
    pub spec2: RootSet,
    pub spec3: RootSet,
    pub case: NormalityCase,
    pub delta: Option<u32>,
    pub crit_curve: Option<CritCurve>,
    /// Total `mu0` added to `u` as a multiple of `v`, if any shear was needed.
    pub shear_applied: Option<BigRational>,
}

impl CheckReport {
    pub fn spec(&self) -> RootSet {
        merge(&[&self.spec0, &self.spec1, &self.spec2, &self.spec3])
    }
}

/// Content with respect to every variable other than `z`.
pub fn z_content(p: &Polynomial) -> Result<Polynomial> {
    let mut c = p.clone();
    for v in p.vars().iter().filter(|&v| v != Var::Z) {
        if c.depends_on(v) {
            c = c.content_primitive(v)?.0;
        }
    }
    Ok(c)
}

fn z_roots(p: &Polynomial) -> Result<RootSet> {
    isolate_real_roots(&z_content(p)?)
}

pub fn check_h1(gp: &GPair) -> bool {
    gp.g.degree(Var::T) == 1
}

/// The values where properness may fail: leading-coefficient contents of
/// `G1`, `G2` in `t`, and the `t`-content of `Res_s` of the cofactors.
pub fn compute_d(gp: &GPair) -> Result<RootSet> {
    compute_d_variant(gp, Var::S)
}

/// `compute_d` eliminating `w` (either `s` or `t`) in the cofactor resultant.
pub fn compute_d_variant(gp: &GPair, w: Var) -> Result<RootSet> {
    let lead = if w == Var::S { Var::T } else { Var::S };
    let d1 = z_roots(&gp.g1.lcoeff_in(lead))?;
    let d2 = z_roots(&gp.g2.lcoeff_in(lead))?;
    let res = gp.g1bar.resultant(&gp.g2bar, w)?;
    if res.is_zero() {
        return Err(Error::Internal("cofactors of G1, G2 share a factor".into()));
    }
    let d3 = z_roots(&res)?;
    Ok(merge(&[&d1, &d2, &d3]))
}

/// H2 by comparing `deg_t u` with `deg_t(u - mu v)` for two random `mu`.
pub fn check_h2<R: Rng>(fam: &ParametrizedFamily, rng: &mut R) -> Result<bool> {
    let du = fam.u.degree(Var::T);
    let deg = |mu: &BigRational| fam.u.sub(&fam.v.scale_by(mu)).degree(Var::T);
    for _ in 0..3 {
        let d1 = deg(&draw_mu(rng));
        let d2 = deg(&draw_mu(rng));
        if d1 == d2 {
            return Ok(du == d1);
        }
    }
    Err(Error::Hypothesis("sheared degree unstable under three pairs of random draws".into()))
}

pub fn compute_spec2(fam: &ParametrizedFamily) -> Result<RootSet> {
    use std::cmp::Ordering::*;
    match fam.m.cmp(&fam.n) {
        Greater => isolate_real_roots(&fam.a),
        Less => isolate_real_roots(&fam.b),
        Equal => isolate_real_roots(&fam.a.gcd(&fam.b)?),
    }
}

pub fn normality_analysis(fam: &ParametrizedFamily) -> Result<Normality> {
    let xu = fam.m > fam.n;
    let yu = fam.r > fam.s;
    let plain = |case, spec3| Normality { case, delta: None, spec3, crit_curve: None };
    if xu && yu {
        return Ok(plain(NormalityCase::BothUnbounded, isolate_real_roots(&fam.a.gcd(&fam.c)?)?));
    }
    if xu {
        return Ok(plain(NormalityCase::XUnbounded, isolate_real_roots(&fam.a)?));
    }
    if yu {
        return Ok(plain(NormalityCase::YUnbounded, isolate_real_roots(&fam.c)?));
    }
    if fam.b.is_zero() && fam.d.is_zero() {
        return Err(Error::Internal("b and d both vanish identically".into()));
    }
    let eta = &(&fam.bstar * &fam.x12) - &(&fam.b * &fam.x11);
    let nu = &(&fam.dstar * &fam.x22) - &(&fam.d * &fam.x21);
    let (g, eta_t, nu_t) = eta.gcd_cofactors(&nu)?;
    let delta = g.degree(Var::T);
    if delta == 0 {
        let crit = CritCurve {
            bstar: fam.bstar.clone(),
            b: fam.b.clone(),
            dstar: fam.dstar.clone(),
            d: fam.d.clone(),
        };
        return Ok(Normality {
            case: NormalityCase::Bounded,
            delta: Some(0),
            spec3: RootSet::empty(),
            crit_curve: Some(crit),
        });
    }
    let res = eta_t.resultant(&nu_t, Var::T)?;
    if res.is_zero() {
        return Err(Error::Hypothesis("v does not depend on t".into()));
    }
    let spec3 = merge(&[
        &isolate_real_roots(&eta.lcoeff_in(Var::T))?,
        &isolate_real_roots(&nu.lcoeff_in(Var::T))?,
        &isolate_real_roots(&res)?,
    ]);
    Ok(Normality { case: NormalityCase::Bounded, delta: Some(delta), spec3, crit_curve: None })
}

/// Runs the hypothesis checks and collects the special values, shearing
/// `u -> u + mu0 v` while H2 fails.
pub fn run_check<R: Rng>(fam: &ParametrizedFamily, rng: &mut R) -> Result<CheckReport> {
    let gpair = build_gpair(fam)?;
    if !check_h1(&gpair) {
        return Err(Error::Improper);
    }
    let mut fam = fam.clone();
    let mut gpair = gpair;
    let mut total = BigRational::zero();
    let mut shears = 0;
    while !check_h2(&fam, rng)? {
        if shears == MAX_SHEARS {
            return Err(Error::Hypothesis(format!("H2 still fails after {MAX_SHEARS} shears")));
        }
        let mu0 = draw_mu(rng);
        fam = shear(&fam, &mu0)?;
        total += mu0;
        shears += 1;
        gpair = build_gpair(&fam)?;
        if !check_h1(&gpair) {
            return Err(Error::Internal("shear broke properness".into()));
        }
    }
    let spec1 = compute_d(&gpair)?;
    let spec2 = compute_spec2(&fam)?;
    let norm = normality_analysis(&fam)?;
    Ok(CheckReport {
        family: fam,
        gpair,
        h1_holds: true,
        h2_holds: true,
        spec0: RootSet::empty(),
        spec1,
        spec2,
        spec3: norm.spec3,
        case: norm.case,
        delta: norm.delta,
        crit_curve: norm.crit_curve,
        shear_applied: if shears > 0 { Some(total) } else { None },
    })
}
