//! The critical set of a family from its parametrization.

use rand::Rng;

use crate::check::{run_check, CheckReport};
use crate::error::{Error, Result};
use crate::family::ParametrizedFamily;
use crate::poly::{Polynomial, RationalFunction, Var};
use crate::realroots::{isolate_real_roots, merge, pick_representatives, Representative, RootSet};

/// Polynomials describing the projection of the critical curve onto the `(x, z)` plane.
#[derive(Clone, Debug)]
pub struct ProjectionData {
    /// Square-free part of the numerator of `du/dt`.
    pub h: Polynomial,
    pub h_tilde: Polynomial,
    /// Square-free part of `Res_s(G1bar, G2bar)`.
    pub j: Polynomial,
    pub j_tilde: Polynomial,
    /// `x X12 - X11`.
    pub f: Polynomial,
    pub m1: Polynomial,
    pub m2: Polynomial,
    pub m1bar: Polynomial,
    pub m2bar: Polynomial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Provenance {
    Spec0,
    Spec1,
    Spec2,
    Spec3,
    A1,
    A2,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Spec0 => "spec0",
            Provenance::Spec1 => "spec1",
            Provenance::Spec2 => "spec2",
            Provenance::Spec3 => "spec3",
            Provenance::A1 => "A1",
            Provenance::A2 => "A2",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CriticalReport {
    pub check: CheckReport,
    pub projection: ProjectionData,
    pub a1: RootSet,
    pub a2: RootSet,
    pub set: RootSet,
    /// Every source contributing each element of `set`, in order.
    pub provenance: Vec<Vec<Provenance>>,
    pub partition: Vec<Representative>,
    pub fast: Option<RootSet>,
}

/// `p / gcd(p, q)`.
fn strip_common(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let g = p.gcd(q)?;
    p.div_exact(&g).ok_or_else(|| Error::Internal("gcd does not divide".into()))
}

pub fn build_projection(check: &CheckReport) -> Result<ProjectionData> {
    let fam = &check.family;
    let gp = &check.gpair;
    let ut = &(&fam.x11.derivative(Var::T) * &fam.x12) - &(&fam.x11 * &fam.x12.derivative(Var::T));
    let res = gp.g1bar.resultant(&gp.g2bar, Var::S)?;
    if res.is_zero() {
        return Err(Error::Internal("Res_s(G1bar, G2bar) vanishes identically despite properness".into()));
    }
    let h = ut.squarefree_part()?;
    let j = res.squarefree_part()?;
    let den = &fam.x12 * &fam.x22;
    let h_tilde = strip_common(&h, &den)?;
    let j_tilde = strip_common(&j, &den)?;
    let f = &(&Polynomial::var(Var::X) * &fam.x12) - &fam.x11;
    let (r1, r2) = rayon::join(|| f.resultant(&h_tilde, Var::T), || f.resultant(&j_tilde, Var::T));
    let (r1, r2) = (r1?, r2?);
    if r1.is_zero() || r2.is_zero() {
        return Err(Error::Internal("projected critical curve vanishes identically".into()));
    }
    let m1 = r1.squarefree_part()?;
    let m2 = r2.squarefree_part()?;
    let (_, m1bar, m2bar) = m1.gcd_cofactors(&m2)?;
    Ok(ProjectionData { h, h_tilde, j, j_tilde, f, m1, m2, m1bar, m2bar })
}

/// Real roots of `D_x(m)`, or of `m` itself when it does not involve `x`.
fn x_discriminant_roots(m: &Polynomial) -> Result<RootSet> {
    if m.degree(Var::X) == 0 {
        return isolate_real_roots(m);
    }
    isolate_real_roots(&m.discriminant(Var::X)?)
}

pub fn compute_a1(proj: &ProjectionData) -> Result<RootSet> {
    let ((r1, r2), r12) = rayon::join(
        || rayon::join(|| x_discriminant_roots(&proj.m1), || x_discriminant_roots(&proj.m2)),
        || -> Result<RootSet> {
            let r = proj.m1bar.resultant(&proj.m2bar, Var::X)?;
            if r.is_zero() {
                return Err(Error::Internal("cofactors of gcd(m1, m2) share a factor".into()));
            }
            isolate_real_roots(&r)
        },
    );
    Ok(merge(&[&r1?, &r2?, &r12?]))
}

/// Roots of the numerator of `m(b*/b, z)`; none when the substitution vanishes.
fn limit_point_roots(m: &Polynomial, xinf: &RationalFunction) -> Result<RootSet> {
    let val = m.substitute(&[(Var::X, xinf.clone())])?;
    if val.is_zero() {
        return Ok(RootSet::empty());
    }
    isolate_real_roots(val.num())
}

pub fn compute_a2(check: &CheckReport, proj: &ProjectionData) -> Result<RootSet> {
    let Some(cc) = &check.crit_curve else {
        return Ok(RootSet::empty());
    };
    let xinf = RationalFunction::new(cc.bstar.clone(), cc.b.clone())?;
    let (r1, r2) = rayon::join(|| limit_point_roots(&proj.m1, &xinf), || limit_point_roots(&proj.m2, &xinf));
    Ok(merge(&[&isolate_real_roots(&cc.b)?, &r1?, &r2?]))
}

fn t_discriminant_roots(p: &Polynomial) -> Result<RootSet> {
    if p.degree(Var::T) == 0 {
        return Ok(RootSet::empty());
    }
    isolate_real_roots(&p.discriminant(Var::T)?)
}

/// Real roots of `Res_t(h, h_t)` and `Res_t(j, j_t)`. A quick subset of the
/// critical set that misses self-intersection values; never sound on its own.
pub fn fast_candidates(proj: &ProjectionData) -> Result<RootSet> {
    let (a, b) = rayon::join(|| t_discriminant_roots(&proj.h), || t_discriminant_roots(&proj.j));
    Ok(merge(&[&a?, &b?]))
}

pub fn run_critical(check: &CheckReport, fast: bool) -> Result<CriticalReport> {
    let projection = build_projection(check)?;
    let fast = if fast { Some(fast_candidates(&projection)?) } else { None };
    let (a1, a2) = rayon::join(|| compute_a1(&projection), || compute_a2(check, &projection));
    let (a1, a2) = (a1?, a2?);
    let sources = [
        (Provenance::Spec0, &check.spec0),
        (Provenance::Spec1, &check.spec1),
        (Provenance::Spec2, &check.spec2),
        (Provenance::Spec3, &check.spec3),
        (Provenance::A1, &a1),
        (Provenance::A2, &a2),
    ];
    let set = merge(&sources.iter().map(|(_, s)| *s).collect::<Vec<_>>());
    let provenance = set
        .iter()
        .map(|a| sources.iter().filter(|(_, s)| s.contains(a)).map(|(p, _)| *p).collect())
        .collect();
    let partition = pick_representatives(&set);
    Ok(CriticalReport { check: check.clone(), projection, a1, a2, set, provenance, partition, fast })
}

/// Check followed by the critical set computation.
pub fn critical_set<R: Rng>(fam: &ParametrizedFamily, rng: &mut R) -> Result<CriticalReport> {
    let check = run_check(fam, rng)?;
    run_critical(&check, false)
}
