//! Resultants of multivariate integer polynomials.
//!
//! The univariate base case is the subresultant remainder sequence. With
//! other variables present we evaluate one of them at a block of consecutive
//! integers where neither leading coefficient vanishes, recurse, and rebuild
//! the answer by Newton interpolation. The degree bound makes the
//! interpolation exact, and skipping bad points keeps specialization sound.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::upoly::UPoly;
use super::zpoly::{Var, ZPoly};
use crate::error::{Error, Result};

/// `Res_w(p, q)` with the Sylvester convention, rows of `p` first.
pub fn resultant(p: &ZPoly, q: &ZPoly, w: Var) -> Result<ZPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::Degenerate("resultant of two zero polynomials".into()));
    }
    if p.is_zero() || q.is_zero() {
        return Ok(ZPoly::zero());
    }
    Ok(res_rec(p, q, w))
}

/// `Res_w(p, dp/dw)`.
pub fn discriminant(p: &ZPoly, w: Var) -> Result<ZPoly> {
    if p.degree(w) == 0 {
        return Err(Error::Degenerate(format!("discriminant of a polynomial constant in {w}")));
    }
    resultant(p, &p.derivative(w), w)
}

fn res_rec(p: &ZPoly, q: &ZPoly, w: Var) -> ZPoly {
    let dp = p.degree(w);
    let dq = q.degree(w);
    if dp == 0 {
        return p.pow(dq);
    }
    if dq == 0 {
        return q.pow(dp);
    }
    let mut others = p.vars().union(q.vars());
    others.remove(w);
    if others.is_empty() {
        let a = UPoly::from_zpoly(p, w).unwrap();
        let b = UPoly::from_zpoly(q, w).unwrap();
        return ZPoly::constant(a.resultant(&b));
    }
    // Interpolate in the variable with the smallest degree bound; the rest
    // are handled by the recursive calls.
    let (v, bound) = others
        .iter()
        .map(|v| (v, p.degree(v) * dq + q.degree(v) * dp))
        .min_by_key(|&(_, b)| b)
        .unwrap();
    if bound == 0 {
        unreachable!("a present variable contributes a positive bound");
    }
    let lp = p.lcoeff_in(w);
    let lq = q.lcoeff_in(w);
    let npts = bound as usize + 1;
    let mut start = -BigInt::from(bound / 2);
    let mut a = start.clone();
    let mut run = 0usize;
    while run < npts {
        if lp.eval_int(v, &a).is_zero() || lq.eval_int(v, &a).is_zero() {
            run = 0;
            a += 1;
            start = a.clone();
            continue;
        }
        run += 1;
        a += 1;
    }
    let points: Vec<BigInt> = (0..npts).map(|i| &start + BigInt::from(i)).collect();
    let values: Vec<ZPoly> = points
        .par_iter()
        .map(|a| res_rec(&p.eval_int(v, a), &q.eval_int(v, a), w))
        .collect();
    newton_interpolate(values, &start, v)
}

/// Rebuilds `R(v)` from `R(a0), R(a0 + 1), ..., R(a0 + n)`.
fn newton_interpolate(mut y: Vec<ZPoly>, a0: &BigInt, v: Var) -> ZPoly {
    let n = y.len() - 1;
    for k in 1..=n {
        for i in (k..=n).rev() {
            y[i] = y[i].sub(&y[i - 1]);
        }
    }
    // Divided differences at unit spacing are forward differences over k!.
    let mut fact = BigInt::one();
    for (k, yk) in y.iter_mut().enumerate().skip(1) {
        fact *= BigInt::from(k);
        *yk = yk.div_scalar_exact(&fact);
    }
    let mut r = y[n].clone();
    for k in (0..n).rev() {
        let node = a0 + BigInt::from(k);
        r = r.mul_linear(v, &node).add(&y[k]);
    }
    r
}
