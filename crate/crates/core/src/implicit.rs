//! Critical sets from the implicit equation of the family.

use rand::Rng;

use crate::error::{Error, Result};
use crate::family::{draw_mu, shear, ParametrizedFamily};
use crate::poly::{Polynomial, Var};
use crate::realroots::{isolate_real_roots, RootSet};

#[derive(Clone, Debug)]
pub struct ImplicitSurface {
    /// `F(x, y, z) = 0` contains every curve of the family.
    pub f: Polynomial,
    /// Square-free part of `D_y(F)`.
    pub m: Polynomial,
    /// `D_x(M)`, absent when `M` does not involve `x`.
    pub r: Option<Polynomial>,
}

/// Ceiling on the size of the implicit equation; the oracle gives up above it.
/// The cost is dominated by `D_y(F)` and `D_x(M)`, whose degrees grow with the
/// `x`, `y` degree of `F` and whose size grows with its term count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexityGuard {
    pub max_terms: usize,
    /// Bound on `max(deg_x F, deg_y F)`.
    pub max_xy_degree: u32,
}

impl Default for ComplexityGuard {
    fn default() -> Self {
        ComplexityGuard { max_terms: 200, max_xy_degree: 5 }
    }
}

impl ComplexityGuard {
    pub fn unlimited() -> Self {
        ComplexityGuard { max_terms: usize::MAX, max_xy_degree: u32::MAX }
    }

    fn admit(&self, what: &str, p: &Polynomial) -> Result<()> {
        let deg = p.degree(Var::X).max(p.degree(Var::Y));
        if p.nterms() > self.max_terms || deg > self.max_xy_degree {
            return Err(Error::ComplexityGuard(format!(
                "{what} has {} terms and degree {deg} in x, y (limits {} and {})",
                p.nterms(),
                self.max_terms,
                self.max_xy_degree
            )));
        }
        Ok(())
    }
}

/// `F = sqfree(Res_t(x X12 - X11, y X22 - X21))` with factors free of `x`
/// and `y` removed.
pub fn implicitize(fam: &ParametrizedFamily) -> Result<Polynomial> {
    let p = &(&Polynomial::var(Var::X) * &fam.x12) - &fam.x11;
    let q = &(&Polynomial::var(Var::Y) * &fam.x22) - &fam.x21;
    let res = p.resultant(&q, Var::T)?;
    if res.is_zero() {
        return Err(Error::Degenerate("implicit equation vanishes identically".into()));
    }
    let mut c = res.clone();
    for v in [Var::X, Var::Y] {
        if c.depends_on(v) {
            c = c.content_primitive(v)?.0;
        }
    }
    let stripped = res.div_exact(&c).ok_or_else(|| Error::Internal("content does not divide".into()))?;
    stripped.squarefree_part()
}

/// Checks the hypotheses on `F` the implicit method needs.
pub fn check_surface(f: &Polynomial) -> Result<()> {
    if f.degree(Var::Y) == 0 {
        return Err(Error::Hypothesis("implicit equation does not depend on y".into()));
    }
    if f.lcoeff_in(Var::Y).depends_on(Var::X) {
        return Err(Error::Hypothesis(
            "leading coefficient of F in y depends on x; apply a shear x -> x + mu y".into(),
        ));
    }
    Ok(())
}

pub fn implicit_surface(fam: &ParametrizedFamily, guard: &ComplexityGuard) -> Result<ImplicitSurface> {
    let f = implicitize(fam)?;
    guard.admit("F", &f)?;
    check_surface(&f)?;
    let m = f.discriminant(Var::Y)?.squarefree_part()?;
    let r = if m.degree(Var::X) == 0 { None } else { Some(m.discriminant(Var::X)?) };
    Ok(ImplicitSurface { f, m, r })
}

/// Real roots of `R`, or of `M` when `M` is free of `x`. Empty means a single topology type.
pub fn implicit_critical_set(surf: &ImplicitSurface) -> Result<RootSet> {
    match &surf.r {
        Some(r) => isolate_real_roots(r),
        None => isolate_real_roots(&surf.m),
    }
}

/// The implicit method on `fam`, shearing up to five times when `F` violates
/// its hypotheses. Returns the surface actually used and its critical set.
pub fn oracle<R: Rng>(
    fam: &ParametrizedFamily,
    guard: &ComplexityGuard,
    rng: &mut R,
) -> Result<(ImplicitSurface, RootSet)> {
    let mut cur = fam.clone();
    let mut last = None;
    for _ in 0..=crate::check::MAX_SHEARS {
        match implicit_surface(&cur, guard) {
            Ok(s) => {
                let set = implicit_critical_set(&s)?;
                return Ok((s, set));
            }
            Err(e @ Error::Hypothesis(_)) => {
                last = Some(e);
                cur = shear(fam, &draw_mu(rng))?;
            }
            Err(e) => return Err(e),
        }
    }
    Err(last.unwrap())
}
