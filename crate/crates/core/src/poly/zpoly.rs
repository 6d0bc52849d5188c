//! Sparse multivariate polynomials with integer coefficients.
//!
//! This is the workhorse representation behind [`super::Polynomial`]. Terms are
//! kept sorted in increasing monomial order with no zero coefficients, so two
//! values are equal exactly when they denote the same polynomial.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

pub const NVARS: usize = 6;

/// The fixed variable universe, listed in increasing order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Var {
    T = 0,
    S = 1,
    X = 2,
    Y = 3,
    /// The family parameter.
    Z = 4,
    Mu = 5,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::T, Var::S, Var::X, Var::Y, Var::Z, Var::Mu];

    #[inline]
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::S => "s",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
            Var::Mu => "mu",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Bit set of variables.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct VarSet(pub u8);

impl VarSet {
    pub fn contains(self, v: Var) -> bool {
        self.0 & (1 << v.index()) != 0
    }
    pub fn insert(&mut self, v: Var) {
        self.0 |= 1 << v.index();
    }
    pub fn remove(&mut self, v: Var) {
        self.0 &= !(1 << v.index());
    }
    pub fn union(self, o: VarSet) -> VarSet {
        VarSet(self.0 | o.0)
    }
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }
    pub fn iter(self) -> impl Iterator<Item = Var> {
        Var::ALL.into_iter().filter(move |v| self.contains(*v))
    }
    /// Largest variable in the set.
    pub fn last(self) -> Option<Var> {
        self.iter().last()
    }
}

/// Exponent vector indexed by [`Var`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Monomial(pub [u32; NVARS]);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial([0; NVARS])
    }

    pub fn var(v: Var, e: u32) -> Monomial {
        let mut m = Monomial::one();
        m.0[v.index()] = e;
        m
    }

    #[inline]
    pub fn get(&self, v: Var) -> u32 {
        self.0[v.index()]
    }

    #[inline]
    pub fn with(mut self, v: Var, e: u32) -> Monomial {
        self.0[v.index()] = e;
        self
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..NVARS {
            r.0[i] += o.0[i];
        }
        r
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic, ties broken from the largest variable down.
    fn cmp(&self, o: &Monomial) -> Ordering {
        self.total()
            .cmp(&o.total())
            .then_with(|| self.0.iter().rev().cmp(o.0.iter().rev()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Monomial) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ZPoly {
    terms: Vec<(Monomial, BigInt)>,
}

impl ZPoly {
    pub fn zero() -> ZPoly {
        ZPoly { terms: Vec::new() }
    }

    pub fn one() -> ZPoly {
        ZPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> ZPoly {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(Monomial::one(), c)] }
        }
    }

    pub fn var(v: Var) -> ZPoly {
        ZPoly { terms: vec![(Monomial::var(v, 1), BigInt::one())] }
    }

    pub fn monomial(m: Monomial, c: BigInt) -> ZPoly {
        if c.is_zero() {
            ZPoly::zero()
        } else {
            ZPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> ZPoly {
        let mut acc: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in it {
            *acc.entry(m).or_insert_with(BigInt::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, BigInt>) -> ZPoly {
        let mut terms: Vec<(Monomial, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        ZPoly { terms }
    }

    /// Builds from terms already sorted and free of duplicates and zeros.
    pub(crate) fn from_sorted(terms: Vec<(Monomial, BigInt)>) -> ZPoly {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        ZPoly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, BigInt)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<BigInt> {
        if self.terms.is_empty() {
            Some(BigInt::zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// Coefficient of the largest monomial.
    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.last().map(|(m, _)| m)
    }

    pub fn degree(&self, v: Var) -> u32 {
        self.terms.iter().map(|(m, _)| m.get(v)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.total()).max().unwrap_or(0)
    }

    pub fn vars(&self) -> VarSet {
        let mut s = VarSet::default();
        for (m, _) in &self.terms {
            for v in Var::ALL {
                if m.get(v) > 0 {
                    s.insert(v);
                }
            }
        }
        s
    }

    pub fn depends_on(&self, v: Var) -> bool {
        self.terms.iter().any(|(m, _)| m.get(v) > 0)
    }

    pub fn max_norm(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.abs()).max().unwrap_or_else(BigInt::zero)
    }

    pub fn max_bits(&self) -> u64 {
        self.terms.iter().map(|(_, c)| c.bits()).max().unwrap_or(0)
    }

    /// Nonnegative gcd of the integer coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn scale(&self, k: &BigInt) -> ZPoly {
        if k.is_zero() {
            return ZPoly::zero();
        }
        ZPoly { terms: self.terms.iter().map(|(m, c)| (*m, c * k)).collect() }
    }

    /// Divides every coefficient by `k`; panics if some coefficient is not a multiple.
    pub fn div_scalar_exact(&self, k: &BigInt) -> ZPoly {
        ZPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "inexact scalar division");
                    (*m, q)
                })
                .collect(),
        }
    }

    pub fn try_div_scalar(&self, k: &BigInt) -> Option<ZPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            terms.push((*m, q));
        }
        Some(ZPoly { terms })
    }

    /// Content removed and sign fixed so the leading coefficient is positive.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return ZPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coefficient().unwrap().is_negative() {
            c = -c;
        }
        if c.is_one() {
            self.clone()
        } else {
            self.div_scalar_exact(&c)
        }
    }

    /// Sign flipped if needed so the leading coefficient is positive.
    pub fn normalize_sign(self) -> ZPoly {
        match self.leading_coefficient() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self,
        }
    }

    pub fn add(&self, o: &ZPoly) -> ZPoly {
        self.merge(o, false)
    }

    pub fn sub(&self, o: &ZPoly) -> ZPoly {
        self.merge(o, true)
    }

    fn merge(&self, o: &ZPoly, negate: bool) -> ZPoly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        ZPoly { terms: out }
    }

    pub fn mul(&self, o: &ZPoly) -> ZPoly {
        if self.is_zero() || o.is_zero() {
            return ZPoly::zero();
        }
        if let Some(c) = self.constant_value() {
            return o.scale(&c);
        }
        if let Some(c) = o.constant_value() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, BigInt> = HashMap::with_capacity(self.terms.len() * o.terms.len() / 2 + 1);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(BigInt::zero);
                *e += ca * cb;
            }
        }
        Self::from_map(acc)
    }

    /// Multiplies by `v^k`.
    pub fn shift(&self, v: Var, k: u32) -> ZPoly {
        if k == 0 {
            return self.clone();
        }
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .map(|(m, c)| (m.with(v, m.get(v) + k), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        ZPoly { terms }
    }

    pub fn pow(&self, mut e: u32) -> ZPoly {
        let mut base = self.clone();
        let mut acc = ZPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Coefficients as a polynomial in `v`; entry `k` multiplies `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<ZPoly> {
        let d = self.degree(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigInt)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.get(v) as usize].push((m.with(v, 0), c.clone()));
        }
        // Zeroing one exponent can break the ordering, so re-sort each bucket.
        buckets
            .into_iter()
            .map(|mut b| {
                b.sort_unstable_by_key(|x| x.0);
                ZPoly { terms: b }
            })
            .collect()
    }

    pub fn from_coeffs(v: Var, cs: &[ZPoly]) -> ZPoly {
        let mut terms = Vec::new();
        for (k, c) in cs.iter().enumerate() {
            for (m, x) in &c.terms {
                debug_assert_eq!(m.get(v), 0);
                terms.push((m.with(v, k as u32), x.clone()));
            }
        }
        terms.sort_unstable_by_key(|a| a.0);
        ZPoly { terms }
    }

    pub fn coeff_in(&self, v: Var, k: u32) -> ZPoly {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.get(v) == k)
            .map(|(m, c)| (m.with(v, 0), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        ZPoly { terms }
    }

    /// Leading coefficient with respect to `v`.
    pub fn lcoeff_in(&self, v: Var) -> ZPoly {
        self.coeff_in(v, self.degree(v))
    }

    pub fn derivative(&self, v: Var) -> ZPoly {
        let mut terms: Vec<_> = self
            .terms
            .iter()
            .filter(|(m, _)| m.get(v) > 0)
            .map(|(m, c)| {
                let e = m.get(v);
                (m.with(v, e - 1), c * BigInt::from(e))
            })
            .collect();
        terms.sort_unstable_by_key(|a| a.0);
        ZPoly { terms }
    }

    /// Substitutes the integer `a` for `v`.
    pub fn eval_int(&self, v: Var, a: &BigInt) -> ZPoly {
        if !self.depends_on(v) {
            return self.clone();
        }
        let d = self.degree(v) as usize;
        let mut pows = Vec::with_capacity(d + 1);
        pows.push(BigInt::one());
        for i in 1..=d {
            let p = &pows[i - 1] * a;
            pows.push(p);
        }
        ZPoly::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.with(v, 0), c * &pows[m.get(v) as usize])),
        )
    }

    /// Substitutes the polynomial `q` for `v`.
    pub fn compose(&self, v: Var, q: &ZPoly) -> ZPoly {
        if !self.depends_on(v) {
            return self.clone();
        }
        let cs = self.coeffs_in(v);
        let mut acc = ZPoly::zero();
        for c in cs.iter().rev() {
            acc = acc.mul(q).add(c);
        }
        acc
    }

    /// Renames variables through `map` (applied simultaneously).
    pub fn rename(&self, map: &[(Var, Var)]) -> ZPoly {
        ZPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let mut n = *m;
            for &(from, _) in map {
                n.0[from.index()] = 0;
            }
            for &(from, to) in map {
                n.0[to.index()] += m.get(from);
            }
            (n, c.clone())
        }))
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &ZPoly) -> Option<ZPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if let Some(c) = d.constant_value() {
            return self.try_div_scalar(&c);
        }
        for v in d.vars().iter() {
            if self.degree(v) < d.degree(v) {
                return None;
            }
        }
        let v = d.vars().last().unwrap();
        let dc = d.coeffs_in(v);
        let dn = dc.len() - 1;
        let mut rem = self.coeffs_in(v);
        let qlen = rem.len() - dn;
        let mut q = vec![ZPoly::zero(); qlen];
        for k in (0..qlen).rev() {
            if rem[k + dn].is_zero() {
                continue;
            }
            let qc = rem[k + dn].div_exact(&dc[dn])?;
            for (i, dci) in dc.iter().enumerate() {
                if !dci.is_zero() {
                    rem[k + i] = rem[k + i].sub(&qc.mul(dci));
                }
            }
            q[k] = qc;
        }
        if rem.iter().any(|r| !r.is_zero()) {
            return None;
        }
        Some(ZPoly::from_coeffs(v, &q))
    }

    /// Dense coefficient vector when the polynomial involves at most `v`.
    pub fn to_dense(&self, v: Var) -> Option<Vec<BigInt>> {
        let mut out = vec![BigInt::zero(); self.degree(v) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != v.index() && e != 0) {
                return None;
            }
            out[m.get(v) as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_dense(v: Var, cs: &[BigInt]) -> ZPoly {
        ZPoly {
            terms: cs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (Monomial::var(v, k as u32), c.clone()))
                .collect(),
        }
    }

    /// `self * (v - a)`.
    pub fn mul_linear(&self, v: Var, a: &BigInt) -> ZPoly {
        let shifted = self.shift(v, 1);
        if a.is_zero() {
            shifted
        } else {
            shifted.sub(&self.scale(a))
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::display::write_terms(
            f,
            self.terms.iter().rev().map(|(m, c)| (m, num_rational::BigRational::from_integer(c.clone()))),
            &super::display::DEFAULT_NAMES,
        )
    }
}
