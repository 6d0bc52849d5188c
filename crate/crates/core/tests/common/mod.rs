//! Independent reference computations shared by the integration tests.
//! Nothing here calls into the resultant, gcd or root isolation code under test.
#![allow(dead_code)]

use std::path::PathBuf;

use critcurve::family::ParametrizedFamily;
use critcurve::parse::parse_family;
use critcurve::poly::{Polynomial, Var};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qq(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn families_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/families")
}

pub fn family(name: &str) -> ParametrizedFamily {
    parse_family(&families_dir().join(format!("{name}.fam"))).unwrap()
}

/// Families whose full pipeline finishes in seconds.
pub const CHEAP: [&str; 7] = ["cardioid", "ex2", "family01", "family08", "family10", "family11", "family12"];

/// `sum c t^i z^j`.
pub fn tz(terms: &[(i64, u32, u32)]) -> Polynomial {
    let t = Polynomial::var(Var::T);
    let z = Polynomial::var(Var::Z);
    let mut p = Polynomial::zero();
    for &(c, i, j) in terms {
        p = &p + &(&Polynomial::integer(c) * &(&t.pow(i) * &z.pow(j)));
    }
    p
}

/// Dense coefficients in `v`, lowest degree first; `p` must involve no other variable.
pub fn dense(p: &Polynomial, v: Var) -> Vec<BigRational> {
    (0..=p.degree(v)).map(|k| p.coeff_in(v, k).constant_value().unwrap_or_else(BigRational::zero)).collect()
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut acc = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            m.swap(p, c);
            acc = -acc;
        }
        let piv = m[c][c].clone();
        acc *= &piv;
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let f = &m[r][c] / &piv;
            for k in c..n {
                let d = &f * &m[c][k];
                m[r][k] -= d;
            }
        }
    }
    acc
}

/// Resultant of two dense univariate polynomials as the Sylvester determinant.
pub fn sylvester_resultant(p: &[BigRational], q: &[BigRational]) -> BigRational {
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    let n = dp + dq;
    if n == 0 {
        return BigRational::one();
    }
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for i in 0..dq {
        for (k, c) in p.iter().rev().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..dp {
        for (k, c) in q.iter().rev().enumerate() {
            m[dq + i][i + k] = c.clone();
        }
    }
    det(m)
}

fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().unwrap().is_zero() {
        v.pop();
    }
    v
}

fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b[db].clone();
    while r.len() > db && !(r.len() == 1 && r[0].is_zero()) {
        let k = r.len() - 1 - db;
        let f = r.last().unwrap() / &lb;
        for (i, c) in b.iter().enumerate() {
            let d = &f * c;
            r[i + k] -= d;
        }
        r.pop();
        if r.is_empty() {
            r.push(BigRational::zero());
        }
    }
    trim(r)
}

fn eval(p: &[BigRational], x: &BigRational) -> BigRational {
    p.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
}

fn sign_changes(seq: &[Vec<BigRational>], x: &BigRational) -> usize {
    let signs: Vec<bool> =
        seq.iter().map(|p| eval(p, x)).filter(|v| !v.is_zero()).map(|v| v.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots in `(lo, hi]` from the classical Sturm sequence.
pub fn sturm_count(p: &[BigRational], lo: &BigRational, hi: &BigRational) -> usize {
    let p = trim(p.to_vec());
    if p.len() < 2 {
        return 0;
    }
    let dp: Vec<BigRational> = p.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect();
    let mut seq = vec![p, trim(dp)];
    loop {
        let n = seq.len();
        if seq[n - 1].len() == 1 && seq[n - 1][0].is_zero() {
            seq.pop();
            break;
        }
        if seq[n - 1].len() == 1 {
            break;
        }
        let r: Vec<BigRational> = rem(&seq[n - 2], &seq[n - 1]).into_iter().map(|c| -c).collect();
        seq.push(r);
    }
    sign_changes(&seq, lo) - sign_changes(&seq, hi)
}

/// A bound on the absolute value of every real root (Cauchy).
pub fn cauchy_bound(p: &[BigRational]) -> BigRational {
    let p = trim(p.to_vec());
    let lc = p.last().unwrap().abs();
    q(1) + p[..p.len() - 1].iter().map(|c| c.abs() / &lc).fold(BigRational::zero(), |a, b| if b > a { b } else { a })
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix of dense integer polynomials given lowest degree first.
pub fn sylvester_matrix(p: &[BigInt], q: &[BigInt]) -> Vec<Vec<BigInt>> {
    let (dp, dq) = (p.len() - 1, q.len() - 1);
    let n = dp + dq;
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for i in 0..dq {
        for (k, c) in p.iter().rev().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..dp {
        for (k, c) in q.iter().rev().enumerate() {
            m[dq + i][i + k] = c.clone();
        }
    }
    m
}
