//! Dense univariate polynomials over the integers.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::zpoly::{Var, ZPoly};

/// Coefficient vector, index = degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(pub Vec<BigInt>);

impl UPoly {
    pub fn new(mut c: Vec<BigInt>) -> UPoly {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn from_i64(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> UPoly {
        UPoly(Vec::new())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `-1`.
    pub fn degree(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn from_zpoly(p: &ZPoly, v: Var) -> Option<UPoly> {
        p.to_dense(v).map(UPoly::new)
    }

    pub fn to_zpoly(&self, v: Var) -> ZPoly {
        ZPoly::from_dense(v, &self.0)
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content removed, leading coefficient positive.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        UPoly(self.0.iter().map(|c| c / &g).collect())
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut r = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                r[i + j] += a * b;
            }
        }
        UPoly::new(r)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        UPoly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn prem(&self, d: &UPoly) -> UPoly {
        assert!(!d.is_zero());
        let dn = d.0.len() - 1;
        if self.0.len() <= dn {
            return self.clone();
        }
        let mut r = self.0.clone();
        let lc = d.lc().clone();
        let mut e = r.len() - dn;
        while r.len() > dn {
            let k = r.len() - 1 - dn;
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &top * dc;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
            e -= 1;
        }
        if e > 0 {
            let f = num_traits::pow(lc, e);
            for c in r.iter_mut() {
                *c *= &f;
            }
        }
        UPoly::new(r)
    }

    /// Exact division; `None` when `d` does not divide `self` over the integers.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        assert!(!d.is_zero());
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let dn = d.0.len() - 1;
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let (qc, rem) = r[k + dn].div_rem(d.lc());
            if !rem.is_zero() {
                return None;
            }
            if qc.is_zero() {
                continue;
            }
            for (i, dc) in d.0.iter().enumerate() {
                r[k + i] -= &qc * dc;
            }
            q[k] = qc;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(UPoly::new(q))
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `q^n * p(a/q)` with `n = deg p`; same sign as `p(a/q)` when `q > 0`.
    pub fn eval_homogeneous(&self, a: &BigInt, q: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut qp = BigInt::one();
        // Horner on the homogenized form: sum c_i a^i q^(n-i).
        for c in self.0.iter().rev() {
            acc = acc * a + c * &qp;
            qp *= q;
        }
        // The loop multiplied the i-th coefficient by q^(n-i) where n = len-1.
        acc
    }

    pub fn sign_at(&self, x: &BigRational) -> Sign {
        self.eval_homogeneous(x.numer(), x.denom()).sign()
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// `p(x + 1)`.
    pub fn taylor_shift1(&self) -> UPoly {
        let mut a = self.0.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let t = a[j + 1].clone();
                a[j] += t;
            }
        }
        UPoly(a)
    }

    /// `x^n p(1/x)`.
    pub fn reverse(&self) -> UPoly {
        let mut a = self.0.clone();
        a.reverse();
        UPoly::new(a)
    }

    /// `2^(k n) p(x / 2^k)`.
    pub fn scale_half(&self, k: u64) -> UPoly {
        let n = self.0.len();
        UPoly(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| c << ((n - 1 - i) as u64 * k))
                .collect(),
        )
    }

    /// `p(c x)`.
    pub fn scale_var(&self, c: &BigInt) -> UPoly {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.0.len());
        for a in &self.0 {
            out.push(a * &pw);
            pw *= c;
        }
        UPoly::new(out)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> UPoly {
        UPoly(
            self.0
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn sign_variations(&self) -> usize {
        let mut last = Sign::NoSign;
        let mut v = 0;
        for c in &self.0 {
            let s = c.sign();
            if s == Sign::NoSign {
                continue;
            }
            if last != Sign::NoSign && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Divides out `x^k` where `k` is the multiplicity of the root 0.
    pub fn strip_zero_roots(&self) -> (UPoly, usize) {
        let k = self.0.iter().take_while(|c| c.is_zero()).count();
        (UPoly(self.0[k..].to_vec()), k)
    }

    /// Resultant by the subresultant remainder sequence, Sylvester sign convention
    /// (rows of `self` first).
    pub fn resultant(&self, o: &UPoly) -> BigInt {
        if self.is_zero() || o.is_zero() {
            return BigInt::zero();
        }
        let (da, db) = (self.degree() as u64, o.degree() as u64);
        if da == 0 {
            return num_traits::pow(self.lc().clone(), db as usize);
        }
        if db == 0 {
            return num_traits::pow(o.lc().clone(), da as usize);
        }
        let (mut a, mut b, mut sign) = if da < db {
            (o.clone(), self.clone(), if (da * db) % 2 == 1 { -1 } else { 1 })
        } else {
            (self.clone(), o.clone(), 1)
        };
        let ca = a.content();
        let cb = b.content();
        a = UPoly(a.0.iter().map(|c| c / &ca).collect());
        b = UPoly(b.0.iter().map(|c| c / &cb).collect());
        let t = num_traits::pow(ca, b.degree() as usize) * num_traits::pow(cb, a.degree() as usize);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = (a.degree() - b.degree()) as usize;
            if a.degree() % 2 == 1 && b.degree() % 2 == 1 {
                sign = -sign;
            }
            let r = a.prem(&b);
            if r.is_zero() {
                return BigInt::zero();
            }
            a = b;
            let div = &g * num_traits::pow(h.clone(), delta);
            b = UPoly(r.0.iter().map(|c| c / &div).collect());
            g = a.lc().clone();
            h = match delta {
                0 => h,
                1 => g.clone(),
                _ => num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1),
            };
            if b.degree() == 0 {
                let da = a.degree() as usize;
                let bl = b.lc().clone();
                let hh = if da == 0 {
                    h
                } else if da == 1 {
                    bl
                } else {
                    num_traits::pow(bl, da) / num_traits::pow(h, da - 1)
                };
                return BigInt::from(sign) * t * hh;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_resultant() {
        // Res(x - 2, x - 5) = 2 - 5 under the rows-of-first convention.
        let a = UPoly::from_i64(&[-2, 1]);
        let b = UPoly::from_i64(&[-5, 1]);
        assert_eq!(a.resultant(&b), BigInt::from(-3));
    }

    #[test]
    fn quadratic_discriminant_resultant() {
        // Res(x^2 + 3x + 1, 2x + 3) = -(9 - 4)
        let p = UPoly::from_i64(&[1, 3, 1]);
        assert_eq!(p.resultant(&p.derivative()), BigInt::from(-5));
    }

    #[test]
    fn shift_and_scale() {
        let p = UPoly::from_i64(&[1, 2, 1]);
        assert_eq!(p.taylor_shift1(), UPoly::from_i64(&[4, 4, 1]));
        assert_eq!(p.scale_half(1), UPoly::from_i64(&[4, 4, 1]));
        assert_eq!(p.reflect(), UPoly::from_i64(&[1, -2, 1]));
    }

    #[test]
    fn homogeneous_eval_sign() {
        let p = UPoly::from_i64(&[-1, 0, 2]);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p.sign_at(&half), Sign::Minus);
        assert_eq!(p.eval_homogeneous(&BigInt::from(1), &BigInt::from(2)), BigInt::from(-2));
    }
}
