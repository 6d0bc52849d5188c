//! Exact polynomial arithmetic.
//!
//! [`Polynomial`] is the public type: rational coefficients over the fixed
//! variable universe `t < s < x < y < z < mu` (the family parameter is `z`).
//! Internally a polynomial is stored as a rational scale times a primitive
//! integer polynomial with positive leading coefficient, which is a canonical
//! form, so structural equality is mathematical equality.

pub mod display;
pub mod gcd;
pub mod resultant;
pub mod sqfree;
pub mod upoly;
pub mod zpoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
pub use display::{Names, DEFAULT_NAMES};
pub use upoly::UPoly;
pub use zpoly::{Monomial, Var, VarSet, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    scale: BigRational,
    prim: ZPoly,
}

impl Default for Polynomial {
    fn default() -> Self {
        Polynomial::zero()
    }
}

fn lcm(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { scale: BigRational::zero(), prim: ZPoly::zero() }
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial { scale: c, prim: ZPoly::one() }
        }
    }

    pub fn integer(c: i64) -> Polynomial {
        Polynomial::constant(BigRational::from_integer(c.into()))
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial { scale: BigRational::one(), prim: ZPoly::var(v) }
    }

    /// Canonicalizes `k * p`.
    pub fn from_scaled(k: BigRational, p: ZPoly) -> Polynomial {
        if k.is_zero() || p.is_zero() {
            return Polynomial::zero();
        }
        let mut c = p.content();
        if p.leading_coefficient().unwrap().is_negative() {
            c = -c;
        }
        let prim = if c.is_one() { p } else { p.div_scalar_exact(&c) };
        Polynomial { scale: k * BigRational::from_integer(c), prim }
    }

    pub fn from_zpoly(p: ZPoly) -> Polynomial {
        Polynomial::from_scaled(BigRational::one(), p)
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(it: I) -> Polynomial {
        let terms: Vec<(Monomial, BigRational)> = it.into_iter().collect();
        let den = terms.iter().fold(BigInt::one(), |acc, (_, c)| lcm(&acc, c.denom()));
        let z = ZPoly::from_terms(terms.into_iter().map(|(m, c)| (m, (c * BigRational::from_integer(den.clone())).to_integer())));
        Polynomial::from_scaled(BigRational::new(BigInt::one(), den), z)
    }

    /// The canonical term map.
    pub fn terms(&self) -> BTreeMap<Monomial, BigRational> {
        self.prim
            .terms()
            .iter()
            .map(|(m, c)| (*m, &self.scale * BigRational::from_integer(c.clone())))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.prim.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.prim.is_constant()
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        self.is_constant().then(|| self.scale.clone())
    }

    /// Rational factor in `self = scale * primitive`.
    pub fn scale(&self) -> &BigRational {
        &self.scale
    }

    /// Primitive integer polynomial with positive leading coefficient.
    pub fn primitive_z(&self) -> &ZPoly {
        &self.prim
    }

    /// Integer polynomial when all coefficients are integers.
    pub fn to_zpoly(&self) -> Option<ZPoly> {
        self.scale.is_integer().then(|| self.prim.scale(&self.scale.to_integer()))
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.prim.degree(v)
    }

    pub fn total_degree(&self) -> u32 {
        self.prim.total_degree()
    }

    pub fn vars(&self) -> VarSet {
        self.prim.vars()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.prim.depends_on(v)
    }

    pub fn nterms(&self) -> usize {
        self.prim.nterms()
    }

    /// Leading coefficient under the monomial order.
    pub fn leading_coefficient(&self) -> BigRational {
        match self.prim.leading_coefficient() {
            Some(c) => &self.scale * BigRational::from_integer(c.clone()),
            None => BigRational::zero(),
        }
    }

    pub fn coeff_in(&self, v: Var, k: u32) -> Polynomial {
        Polynomial::from_scaled(self.scale.clone(), self.prim.coeff_in(v, k))
    }

    pub fn lcoeff_in(&self, v: Var) -> Polynomial {
        self.coeff_in(v, self.degree(v))
    }

    pub fn derivative(&self, v: Var) -> Polynomial {
        Polynomial::from_scaled(self.scale.clone(), self.prim.derivative(v))
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        Polynomial { scale: num_traits::pow(self.scale.clone(), e as usize), prim: self.prim.pow(e) }
            .renormalize()
    }

    fn renormalize(self) -> Polynomial {
        if self.prim.is_zero() {
            Polynomial::zero()
        } else {
            self
        }
    }

    pub fn scale_by(&self, k: &BigRational) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        let mut out = self.clone();
        out.scale = &out.scale * k;
        out.renormalize()
    }

    /// Rename variables simultaneously.
    pub fn rename(&self, map: &[(Var, Var)]) -> Polynomial {
        Polynomial::from_scaled(self.scale.clone(), self.prim.rename(map))
    }

    /// Exact quotient, `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Polynomial) -> Option<Polynomial> {
        if d.is_zero() {
            return None;
        }
        let q = self.prim.div_exact(&d.prim)?;
        Some(Polynomial::from_scaled(&self.scale / &d.scale, q))
    }

    /// Normalized gcd: primitive integer polynomial with positive leading coefficient.
    pub fn gcd(&self, o: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && o.is_zero() {
            return Err(Error::Degenerate("gcd of two zero polynomials".into()));
        }
        Ok(Polynomial::from_zpoly(gcd::gcd(&self.prim, &o.prim)))
    }

    /// `(g, self / g, o / g)`.
    pub fn gcd_cofactors(&self, o: &Polynomial) -> Result<(Polynomial, Polynomial, Polynomial)> {
        let g = self.gcd(o)?;
        let a = self.div_exact(&g).ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
        let b = o.div_exact(&g).ok_or_else(|| Error::Internal("gcd does not divide".into()))?;
        Ok((g, a, b))
    }

    /// Resultant with respect to `w`, Sylvester convention with the rows of `self` first.
    pub fn resultant(&self, o: &Polynomial, w: Var) -> Result<Polynomial> {
        let r = resultant::resultant(&self.prim, &o.prim, w)?;
        let k = num_traits::pow(self.scale.clone(), o.degree(w) as usize)
            * num_traits::pow(o.scale.clone(), self.degree(w) as usize);
        Ok(Polynomial::from_scaled(k, r))
    }

    pub fn discriminant(&self, w: Var) -> Result<Polynomial> {
        if self.degree(w) == 0 {
            return Err(Error::Degenerate(format!("discriminant of a polynomial constant in {w}")));
        }
        self.resultant(&self.derivative(w), w)
    }

    /// Square-free part, primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> Result<Polynomial> {
        if self.is_zero() {
            return Err(Error::Degenerate("square-free part of zero".into()));
        }
        Ok(Polynomial::from_zpoly(sqfree::squarefree_part(&self.prim)))
    }

    /// `(content, primitive)` with respect to `w`; the content is the
    /// normalized gcd of the coefficients scaled so its leading coefficient is
    /// positive and `content * primitive == self`.
    pub fn content_primitive(&self, w: Var) -> Result<(Polynomial, Polynomial)> {
        if self.is_zero() {
            return Err(Error::Degenerate("content of zero".into()));
        }
        let c = gcd::content_in(&self.prim, w);
        let prim = self.prim.div_exact(&c).expect("content divides");
        let scale_abs = self.scale.abs();
        let content = Polynomial::from_scaled(scale_abs.clone(), c);
        let primitive = Polynomial::from_scaled(&self.scale / scale_abs, prim);
        Ok((content, primitive))
    }

    /// Evaluate `v` at a rational.
    pub fn eval(&self, v: Var, a: &BigRational) -> Polynomial {
        if !self.depends_on(v) {
            return self.clone();
        }
        let d = self.degree(v);
        // q^d p(n/q) is integral.
        let (n, q) = (a.numer().clone(), a.denom().clone());
        let cs = self.prim.coeffs_in(v);
        let mut acc = ZPoly::zero();
        let mut qpow = BigInt::one();
        for c in cs.iter().rev() {
            acc = acc.scale(&n).add(&c.scale(&qpow));
            qpow *= &q;
        }
        let k = &self.scale / BigRational::from_integer(num_traits::pow(q, d as usize));
        Polynomial::from_scaled(k, acc)
    }

    /// Evaluate every variable.
    pub fn eval_all(&self, point: &[(Var, BigRational)]) -> BigRational {
        let mut p = self.clone();
        for (v, a) in point {
            p = p.eval(*v, a);
        }
        assert!(p.is_constant(), "unbound variable in eval_all");
        p.constant_value().unwrap()
    }

    /// Simultaneous substitution of rational functions for variables.
    pub fn substitute(&self, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction> {
        for (_, b) in bindings {
            if b.den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
        }
        if self.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let degs: Vec<u32> = bindings.iter().map(|(v, _)| self.degree(*v)).collect();
        let mut num_pows: Vec<Vec<ZPoly>> = Vec::new();
        let mut den_pows: Vec<Vec<ZPoly>> = Vec::new();
        let mut den_total = ZPoly::one();
        for ((_, b), &d) in bindings.iter().zip(&degs) {
            let (nz, dz) = b.integer_parts();
            let mut np = vec![ZPoly::one()];
            let mut dp = vec![ZPoly::one()];
            for i in 1..=d as usize {
                np.push(np[i - 1].mul(&nz));
                dp.push(dp[i - 1].mul(&dz));
            }
            den_total = den_total.mul(&dp[d as usize]);
            num_pows.push(np);
            den_pows.push(dp);
        }
        let mut acc = ZPoly::zero();
        for (m, c) in self.prim.terms() {
            let mut rest = *m;
            let mut term = ZPoly::constant(c.clone());
            for (i, ((v, _), &d)) in bindings.iter().zip(&degs).enumerate() {
                let e = m.get(*v) as usize;
                rest = rest.with(*v, 0);
                term = term.mul(&num_pows[i][e]).mul(&den_pows[i][d as usize - e]);
            }
            acc = acc.add(&term.mul(&ZPoly::monomial(rest, BigInt::one())));
        }
        RationalFunction::new(
            Polynomial::from_scaled(self.scale.clone(), acc),
            Polynomial::from_zpoly(den_total),
        )
    }

    pub fn display_with(&self, names: &Names<'_>) -> String {
        let mut s = String::new();
        let terms = self.terms();
        display::write_terms(&mut s, terms.iter().rev().map(|(m, c)| (m, c.clone())), names)
            .expect("writing to a String cannot fail");
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&DEFAULT_NAMES))
    }
}

/// Puts `a` and `b` over a common integer scale: `a = k * A`, `b = k * B`.
fn common_scale(a: &Polynomial, b: &Polynomial) -> (BigRational, ZPoly, ZPoly) {
    let da = a.scale.denom();
    let db = b.scale.denom();
    let den = lcm(da, db);
    let na = (&a.scale * BigRational::from_integer(den.clone())).to_integer();
    let nb = (&b.scale * BigRational::from_integer(den.clone())).to_integer();
    let g = na.gcd(&nb);
    let g = if g.is_zero() { BigInt::one() } else { g };
    (
        BigRational::new(g.clone(), den),
        a.prim.scale(&(&na / &g)),
        b.prim.scale(&(&nb / &g)),
    )
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let (k, a, b) = common_scale(self, o);
        Polynomial::from_scaled(k, a.add(&b))
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, o: &Polynomial) -> Polynomial {
        self + &(-o)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, o: &Polynomial) -> Polynomial {
        if self.is_zero() || o.is_zero() {
            return Polynomial::zero();
        }
        // Gauss: a product of primitive polynomials is primitive.
        Polynomial::from_scaled(&self.scale * &o.scale, self.prim.mul(&o.prim))
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let mut p = self.clone();
        p.scale = -p.scale;
        p
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, o: Polynomial) -> Polynomial {
                (&self).$f(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Reduced quotient of two polynomials. The denominator is a primitive
/// integer polynomial with positive leading coefficient; the numerator
/// carries any rational scale.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    pub fn new(num: Polynomial, den: Polynomial) -> Result<RationalFunction> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RationalFunction::zero());
        }
        let g = gcd::gcd(&num.prim, &den.prim);
        let n = num.prim.div_exact(&g).expect("gcd divides");
        let d = den.prim.div_exact(&g).expect("gcd divides");
        let d = Polynomial::from_zpoly(d);
        let k = &num.scale / &den.scale / &d.scale;
        Ok(RationalFunction {
            num: Polynomial::from_scaled(k, n),
            den: Polynomial { scale: BigRational::one(), prim: d.prim },
        })
    }

    pub fn zero() -> RationalFunction {
        RationalFunction { num: Polynomial::zero(), den: Polynomial::one() }
    }

    pub fn from_poly(p: Polynomial) -> RationalFunction {
        RationalFunction { num: p, den: Polynomial::one() }
    }

    pub fn constant(c: BigRational) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::constant(c))
    }

    pub fn var(v: Var) -> RationalFunction {
        RationalFunction::from_poly(Polynomial::var(v))
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Integer polynomials `(N, D)` with `self = N / D`.
    pub fn integer_parts(&self) -> (ZPoly, ZPoly) {
        let k = &self.num.scale / &self.den.scale;
        (self.num.prim.scale(k.numer()), self.den.prim.scale(k.denom()))
    }

    pub fn add(&self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::new(&self.num + &o.num, self.den.clone()).unwrap();
        }
        let n = &(&self.num * &o.den) + &(&o.num * &self.den);
        RationalFunction::new(n, &self.den * &o.den).unwrap()
    }

    pub fn neg(&self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }

    pub fn sub(&self, o: &RationalFunction) -> RationalFunction {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::new(&self.num * &o.num, &self.den * &o.den).unwrap()
    }

    pub fn div(&self, o: &RationalFunction) -> Result<RationalFunction> {
        if o.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(&self.num * &o.den, &self.den * &o.num)
    }

    pub fn pow(&self, e: u32) -> RationalFunction {
        RationalFunction { num: self.num.pow(e), den: self.den.pow(e) }
    }

    pub fn scale_by(&self, k: &BigRational) -> RationalFunction {
        RationalFunction { num: self.num.scale_by(k), den: self.den.clone() }
    }

    pub fn derivative(&self, v: Var) -> RationalFunction {
        let n = &(&self.num.derivative(v) * &self.den) - &(&self.num * &self.den.derivative(v));
        RationalFunction::new(n, self.den.pow(2)).unwrap()
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.num.depends_on(v) || self.den.depends_on(v)
    }

    /// `max(deg_v num, deg_v den)`.
    pub fn degree(&self, v: Var) -> u32 {
        self.num.degree(v).max(self.den.degree(v))
    }

    pub fn substitute(&self, bindings: &[(Var, RationalFunction)]) -> Result<RationalFunction> {
        let n = self.num.substitute(bindings)?;
        let d = self.den.substitute(bindings)?;
        n.div(&d)
    }

    /// Evaluates `v` at a rational; errors when the denominator vanishes identically.
    pub fn eval(&self, v: Var, a: &BigRational) -> Result<RationalFunction> {
        let d = self.den.eval(v, a);
        if d.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        RationalFunction::new(self.num.eval(v, a), d)
    }

    pub fn display_with(&self, names: &Names<'_>) -> String {
        if self.den.is_constant() {
            self.num.display_with(names).to_string()
        } else {
            format!("({})/({})", self.num.display_with(names), self.den.display_with(names))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(&DEFAULT_NAMES))
    }
}
