//! Multivariate gcd over the integers.
//!
//! The fast path is the heuristic integer gcd (evaluate at a large integer,
//! take the gcd of the images, read the answer back off in balanced base-ξ).
//! Each candidate is certified by trial division, so a wrong guess can only
//! cost time. If every evaluation point fails the primitive remainder
//! sequence takes over.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::zpoly::{Var, VarSet, ZPoly};

const HEU_TRIES: usize = 6;

/// Greatest common divisor with cofactors. The gcd includes the gcd of the
/// integer contents and has a positive leading coefficient.
pub fn gcd_cofactors(f: &ZPoly, g: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    assert!(!(f.is_zero() && g.is_zero()), "gcd of two zero polynomials");
    if f.is_zero() {
        let h = g.clone().normalize_sign();
        let cg = g.div_exact(&h).unwrap();
        return (h, ZPoly::zero(), cg);
    }
    if g.is_zero() {
        let h = f.clone().normalize_sign();
        let cf = f.div_exact(&h).unwrap();
        return (h, cf, ZPoly::zero());
    }
    let h = gcd(f, g);
    let cf = f.div_exact(&h).expect("gcd must divide");
    let cg = g.div_exact(&h).expect("gcd must divide");
    (h, cf, cg)
}

pub fn gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    assert!(!(f.is_zero() && g.is_zero()), "gcd of two zero polynomials");
    if f.is_zero() {
        return g.clone().normalize_sign();
    }
    if g.is_zero() {
        return f.clone().normalize_sign();
    }
    if f.is_constant() || g.is_constant() {
        return ZPoly::constant(f.content().gcd(&g.content()));
    }
    if f == g {
        return f.clone().normalize_sign();
    }
    let fv = f.vars();
    let gv = g.vars();
    // A variable present in only one argument cannot occur in the gcd.
    let mut f = f.clone();
    let mut g = g.clone();
    for v in fv.iter() {
        if !gv.contains(v) {
            f = content_in(&f, v);
        }
    }
    for v in gv.iter() {
        if !fv.contains(v) {
            g = content_in(&g, v);
        }
    }
    if f.is_constant() || g.is_constant() {
        return ZPoly::constant(f.content().gcd(&g.content()));
    }
    let vars = f.vars().union(g.vars());
    match heu_gcd(&f, &g, vars) {
        Some((h, _, _)) => h.normalize_sign(),
        None => prs_gcd(&f, &g).normalize_sign(),
    }
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
pub fn content_in(p: &ZPoly, v: Var) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let mut cs: Vec<ZPoly> = p.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
    // Small coefficients first keeps the running gcd cheap.
    cs.sort_by_key(|c| (c.nterms(), c.total_degree()));
    let mut acc = cs[0].clone();
    for c in &cs[1..] {
        if acc.is_constant() {
            break;
        }
        acc = gcd(&acc, c);
    }
    if acc.is_constant() {
        return ZPoly::constant(p.content());
    }
    acc.normalize_sign()
}

fn balanced_mod(c: &BigInt, x: &BigInt) -> BigInt {
    let mut r = c.mod_floor(x);
    if &r * 2 > *x {
        r -= x;
    }
    r
}

/// Recovers a polynomial in `v` from its image at `v = x`, digit by digit.
fn interpolate(mut h: ZPoly, v: Var, x: &BigInt) -> ZPoly {
    let mut digits = Vec::new();
    while !h.is_zero() {
        let g = ZPoly::from_sorted(
            h.terms()
                .iter()
                .filter_map(|(m, c)| {
                    let r = balanced_mod(c, x);
                    (!r.is_zero()).then_some((*m, r))
                })
                .collect(),
        );
        h = h.sub(&g).div_scalar_exact(x);
        digits.push(g);
    }
    ZPoly::from_coeffs(v, &digits).normalize_sign()
}

fn heu_gcd(f: &ZPoly, g: &ZPoly, vars: VarSet) -> Option<(ZPoly, ZPoly, ZPoly)> {
    if f.is_constant() || g.is_constant() {
        let h = f.content().gcd(&g.content());
        return Some((ZPoly::constant(h.clone()), f.div_scalar_exact(&h), g.div_scalar_exact(&h)));
    }
    let Some(v) = vars.last() else {
        unreachable!("non-constant polynomials involve a variable");
    };
    let fc = f.content();
    let gc = g.content();
    let cont = fc.gcd(&gc);
    let f = f.div_scalar_exact(&cont);
    let g = g.div_scalar_exact(&cont);
    let mut rest = vars;
    rest.remove(v);

    let fnorm = f.max_norm();
    let gnorm = g.max_norm();
    // Below this bound a divisor found by trial division need not be the gcd.
    let mut x: BigInt = fnorm.min(gnorm) * 2 + 2;

    for _ in 0..HEU_TRIES {
        let ff = f.eval_int(v, &x);
        let gg = g.eval_int(v, &x);
        if !ff.is_zero() && !gg.is_zero() {
            if let Some((h, cff, cfg)) = heu_gcd(&ff, &gg, rest) {
                let hp = interpolate(h, v, &x).primitive();
                if !hp.is_zero() {
                    if let Some(qf) = f.div_exact(&hp) {
                        if let Some(qg) = g.div_exact(&hp) {
                            return Some((hp.scale(&cont), qf, qg));
                        }
                    }
                }
                let cf = interpolate(cff, v, &x);
                if !cf.is_zero() {
                    if let Some(h) = f.div_exact(&cf) {
                        if let Some(qg) = g.div_exact(&h) {
                            return Some((h.scale(&cont), cf, qg));
                        }
                    }
                }
                let cg = interpolate(cfg, v, &x);
                if !cg.is_zero() {
                    if let Some(h) = g.div_exact(&cg) {
                        if let Some(qf) = f.div_exact(&h) {
                            return Some((h.scale(&cont), qf, cg));
                        }
                    }
                }
            }
        }
        // x <- x * 73794 * x^(1/4) / 27011
        x = (&x * BigInt::from(73794) * x.sqrt().sqrt()) / BigInt::from(27011);
    }
    None
}

/// Pseudo-remainder of `a` by `b` as polynomials in `v`.
pub fn prem_in(a: &ZPoly, b: &ZPoly, v: Var) -> ZPoly {
    let db = b.degree(v);
    let mut r = a.coeffs_in(v);
    let bc = b.coeffs_in(v);
    let lc = &bc[db as usize];
    let mut steps = (a.degree(v) + 1).saturating_sub(db);
    while r.len() > db as usize && !r.is_empty() {
        let top = r.pop().unwrap();
        let k = r.len() - db as usize;
        for c in r.iter_mut() {
            *c = c.mul(lc);
        }
        for (i, bi) in bc.iter().enumerate().take(db as usize) {
            r[k + i] = r[k + i].sub(&top.mul(bi));
        }
        steps = steps.saturating_sub(1);
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    let mut out = ZPoly::from_coeffs(v, &r);
    if steps > 0 {
        out = out.mul(&lc.pow(steps));
    }
    out
}

/// Primitive part with respect to `v`.
pub fn primitive_in(p: &ZPoly, v: Var) -> ZPoly {
    if p.is_zero() {
        return ZPoly::zero();
    }
    let c = content_in(p, v);
    p.div_exact(&c).expect("content divides").normalize_sign()
}

fn prs_gcd(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_constant() || g.is_constant() {
        return ZPoly::constant(f.content().gcd(&g.content()));
    }
    let vars = f.vars().union(g.vars());
    let v = vars.iter().find(|&v| f.depends_on(v) && g.depends_on(v));
    let Some(v) = v else {
        return ZPoly::constant(f.content().gcd(&g.content()));
    };
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd(&cf, &cg);
    let mut a = f.div_exact(&cf).unwrap();
    let mut b = g.div_exact(&cg).unwrap();
    if a.degree(v) < b.degree(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() && b.degree(v) > 0 {
        let r = prem_in(&a, &b, v);
        a = b;
        b = if r.is_zero() { r } else { primitive_in(&r, v) };
    }
    let pp = if b.is_zero() { a } else { ZPoly::one() };
    c.mul(&primitive_in(&pp, v))
}

/// Gcd computed only by the remainder sequence; exposed for cross-checking.
pub fn gcd_by_prs(f: &ZPoly, g: &ZPoly) -> ZPoly {
    if f.is_zero() {
        return g.clone().normalize_sign();
    }
    if g.is_zero() {
        return f.clone().normalize_sign();
    }
    prs_gcd(f, g).normalize_sign()
}
