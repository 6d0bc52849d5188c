//! Exact real roots of univariate polynomials.
//!
//! Roots are isolated by Descartes' rule of signs with bisection on dyadic
//! intervals. A root is reported as an exact rational when it is one, and
//! otherwise as a square-free integer polynomial plus an isolating interval.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::gcd;
use crate::poly::{Polynomial, UPoly, Var, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsolatedRoot {
    defpoly: UPoly,
    lo: BigRational,
    hi: BigRational,
}

/// An exact real algebraic number.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraicNumber {
    Rational(BigRational),
    Algebraic(IsolatedRoot),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Rational,
    Algebraic,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn sgn(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn upoly_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    let g = gcd::gcd(&a.to_zpoly(Var::Z), &b.to_zpoly(Var::Z));
    UPoly::from_zpoly(&g, Var::Z).unwrap().primitive()
}

fn squarefree(p: &UPoly) -> UPoly {
    let g = upoly_gcd(p, &p.derivative());
    p.div_exact(&g).expect("gcd divides").primitive()
}

impl IsolatedRoot {
    pub fn defpoly(&self) -> &UPoly {
        &self.defpoly
    }

    pub fn interval(&self) -> (&BigRational, &BigRational) {
        (&self.lo, &self.hi)
    }

    fn sign_lo(&self) -> i8 {
        sgn(self.defpoly.sign_at(&self.lo))
    }

    /// Halves the isolating interval. A root exactly at the midpoint (only
    /// possible for an unrecognised rational root) keeps the middle half.
    fn bisect(&mut self) {
        let mid = (&self.lo + &self.hi) / rat(2);
        let sm = sgn(self.defpoly.sign_at(&mid));
        if sm == 0 {
            let lo = (&self.lo + &mid) / rat(2);
            self.hi = (&mid + &self.hi) / rat(2);
            self.lo = lo;
        } else if sm == self.sign_lo() {
            self.lo = mid;
        } else {
            self.hi = mid;
        }
    }

    /// Moves one endpoint to the rational `r` lying inside the interval.
    fn split_at(&mut self, r: &BigRational) {
        let sr = sgn(self.defpoly.sign_at(r));
        if sr == self.sign_lo() {
            self.lo = r.clone();
        } else {
            self.hi = r.clone();
        }
    }

    fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

impl AlgebraicNumber {
    pub fn rational(q: BigRational) -> AlgebraicNumber {
        AlgebraicNumber::Rational(q)
    }

    pub fn integer(n: i64) -> AlgebraicNumber {
        AlgebraicNumber::Rational(rat(n))
    }

    /// The unique root of `p` in `(lo, hi)`; fails unless there is exactly one.
    pub fn from_isolating(p: &Polynomial, lo: BigRational, hi: BigRational) -> Result<AlgebraicNumber> {
        let roots = isolate_real_roots(p)?;
        let mut inside = roots.elems.into_iter().filter(|r| {
            let a = AlgebraicNumber::Rational(lo.clone());
            let b = AlgebraicNumber::Rational(hi.clone());
            compare(&a, r) == Ordering::Less && compare(r, &b) == Ordering::Less
        });
        match (inside.next(), inside.next()) {
            (Some(r), None) => Ok(r),
            _ => Err(Error::Degenerate("interval does not isolate a single root".into())),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            AlgebraicNumber::Rational(_) => Kind::Rational,
            AlgebraicNumber::Algebraic(_) => Kind::Algebraic,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            AlgebraicNumber::Rational(q) => Some(q),
            AlgebraicNumber::Algebraic(_) => None,
        }
    }

    /// Defining polynomial in `z`: `q z - p` for a rational `p/q`.
    pub fn defpoly(&self) -> Polynomial {
        match self {
            AlgebraicNumber::Rational(q) => Polynomial::from_zpoly(
                UPoly::new(vec![-q.numer().clone(), q.denom().clone()]).to_zpoly(Var::Z),
            ),
            AlgebraicNumber::Algebraic(r) => Polynomial::from_zpoly(r.defpoly.to_zpoly(Var::Z)),
        }
    }

    /// A rational interval containing the number; degenerate for rationals.
    pub fn bounds(&self) -> (BigRational, BigRational) {
        match self {
            AlgebraicNumber::Rational(q) => (q.clone(), q.clone()),
            AlgebraicNumber::Algebraic(r) => (r.lo.clone(), r.hi.clone()),
        }
    }

    /// Refined copy whose isolating interval is narrower than `width`.
    pub fn refined(&self, width: &BigRational) -> AlgebraicNumber {
        match self {
            AlgebraicNumber::Rational(_) => self.clone(),
            AlgebraicNumber::Algebraic(r) => {
                let mut r = r.clone();
                while &r.width() >= width {
                    r.bisect();
                }
                AlgebraicNumber::Algebraic(r)
            }
        }
    }

    /// `self - c` shifted exactly; the defining polynomial is translated.
    pub fn translate(&self, c: &BigRational) -> AlgebraicNumber {
        match self {
            AlgebraicNumber::Rational(q) => AlgebraicNumber::Rational(q + c),
            AlgebraicNumber::Algebraic(r) => {
                // p(z - c) has the root alpha + c.
                let p = Polynomial::from_zpoly(r.defpoly.to_zpoly(Var::Z));
                let shifted = p
                    .substitute(&[(
                        Var::Z,
                        crate::poly::RationalFunction::from_poly(
                            &Polynomial::var(Var::Z) - &Polynomial::constant(c.clone()),
                        ),
                    )])
                    .expect("polynomial substitution");
                let z = shifted.num().primitive_z().clone();
                let defpoly = UPoly::from_zpoly(&z, Var::Z).unwrap().primitive();
                AlgebraicNumber::Algebraic(IsolatedRoot { defpoly, lo: &r.lo + c, hi: &r.hi + c })
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let q = match self {
            AlgebraicNumber::Rational(q) => q.clone(),
            AlgebraicNumber::Algebraic(_) => {
                let r = self.refined(&BigRational::new(BigInt::one(), BigInt::one() << 60u32));
                let (lo, hi) = r.bounds();
                (lo + hi) / rat(2)
            }
        };
        ratio_to_f64(&q)
    }

    /// Decimal approximation with `digits` fractional digits.
    pub fn approx_decimal(&self, digits: u32) -> String {
        let q = match self {
            AlgebraicNumber::Rational(q) => q.clone(),
            AlgebraicNumber::Algebraic(_) => {
                let w = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(10), digits as usize + 2));
                let (lo, hi) = self.refined(&w).bounds();
                (lo + hi) / rat(2)
            }
        };
        rational_to_decimal(&q, digits)
    }

    /// Report form: rationals as `"p/q"`, algebraic numbers as defining
    /// polynomial plus isolating interval.
    pub fn to_json(&self, param: &str) -> Value {
        match self {
            AlgebraicNumber::Rational(q) => Value::String(q.to_string()),
            AlgebraicNumber::Algebraic(r) => {
                let mut names = crate::poly::DEFAULT_NAMES;
                names[Var::Z.index()] = param;
                let p = Polynomial::from_zpoly(r.defpoly.to_zpoly(Var::Z));
                json!({
                    "defpoly": p.display_with(&names),
                    "interval": [r.lo.to_string(), r.hi.to_string()],
                    "approx": self.approx_decimal(12),
                })
            }
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraicNumber::Rational(q) => write!(f, "{q}"),
            AlgebraicNumber::Algebraic(r) => {
                let p = Polynomial::from_zpoly(r.defpoly.to_zpoly(Var::Z));
                write!(f, "root of {} in ({}, {}) ~ {}", p, r.lo, r.hi, self.approx_decimal(8))
            }
        }
    }
}

pub fn ratio_to_f64(q: &BigRational) -> f64 {
    // Scale so the quotient has ~64 significant bits before converting.
    let n = q.numer();
    let d = q.denom();
    let shift = d.bits() as i64 - n.bits() as i64 + 64;
    let scaled = if shift >= 0 { (n << shift as u64) / d } else { n / (d << (-shift) as u64) };
    let m = scaled.to_f64().unwrap_or(f64::NAN);
    m * 2f64.powi(-shift as i32)
}

pub fn rational_to_decimal(q: &BigRational, digits: u32) -> String {
    let p10 = num_traits::pow(BigInt::from(10), digits as usize);
    let scaled = q * BigRational::from_integer(p10.clone());
    let r = scaled.round().to_integer();
    let neg = r.is_negative();
    let a = r.abs();
    let (ip, fp) = a.div_rem(&p10);
    let s = if digits == 0 {
        ip.to_string()
    } else {
        format!("{}.{:0>width$}", ip, fp.to_string(), width = digits as usize)
    };
    if neg {
        format!("-{s}")
    } else {
        s
    }
}

/// Strictly increasing list of distinct reals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSet {
    pub elems: Vec<AlgebraicNumber>,
}

impl RootSet {
    pub fn empty() -> RootSet {
        RootSet { elems: Vec::new() }
    }

    /// Sorts and deduplicates arbitrary numbers.
    pub fn from_unsorted(mut v: Vec<AlgebraicNumber>) -> RootSet {
        v.sort_by(compare);
        v.dedup_by(|a, b| compare(a, b) == Ordering::Equal);
        RootSet { elems: v }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, AlgebraicNumber> {
        self.elems.iter()
    }

    pub fn contains(&self, a: &AlgebraicNumber) -> bool {
        self.elems
            .binary_search_by(|e| compare(e, a))
            .is_ok()
    }

    pub fn is_subset_of(&self, o: &RootSet) -> bool {
        self.elems.iter().all(|a| o.contains(a))
    }

    /// Equality as sets of real numbers, whatever the representation.
    pub fn same_as(&self, o: &RootSet) -> bool {
        self.len() == o.len() && self.elems.iter().zip(&o.elems).all(|(a, b)| compare(a, b) == Ordering::Equal)
    }

    pub fn intersect(&self, o: &RootSet) -> RootSet {
        RootSet { elems: self.elems.iter().filter(|a| o.contains(a)).cloned().collect() }
    }

    pub fn translate(&self, c: &BigRational) -> RootSet {
        RootSet { elems: self.elems.iter().map(|a| a.translate(c)).collect() }
    }
}

impl FromIterator<AlgebraicNumber> for RootSet {
    fn from_iter<I: IntoIterator<Item = AlgebraicNumber>>(it: I) -> Self {
        RootSet::from_unsorted(it.into_iter().collect())
    }
}

/// Bound `k` with every positive root below `2^k`.
fn positive_root_bound_log2(p: &UPoly) -> u64 {
    let n = p.degree() as usize;
    let bn = p.lc().bits() as i64;
    let mut k: i64 = 0;
    for i in 1..=n {
        let a = &p.coeffs()[n - i];
        if a.is_zero() {
            continue;
        }
        let e = a.bits() as i64 - bn + 1;
        let r = if e <= 0 { 0 } else { (e + i as i64 - 1) / i as i64 };
        k = k.max(r);
    }
    (k + 1) as u64
}

fn strip_pow2(p: &mut UPoly) {
    let tz = p.0.iter().filter(|c| !c.is_zero()).filter_map(|c| c.trailing_zeros()).min().unwrap_or(0);
    if tz > 0 {
        for c in p.0.iter_mut() {
            *c = &*c >> tz;
        }
    }
}

fn descartes_01(q: &UPoly) -> usize {
    q.reverse().taylor_shift1().sign_variations()
}

/// Roots in `(0, 2^k)` of a square-free `p` with `p(0) != 0`: dyadic rational
/// roots hit exactly plus isolating intervals (endpoints as dyadic rationals).
fn isolate_positive(p: &UPoly) -> (Vec<BigRational>, Vec<(BigRational, BigRational)>) {
    let k = positive_root_bound_log2(p);
    let mut q = p.scale_var(&(BigInt::one() << k));
    strip_pow2(&mut q);
    let scale = BigRational::from_integer(BigInt::one() << k);
    let mut rationals = Vec::new();
    let mut intervals = Vec::new();
    // (poly on (0,1), c, j): node interval (c/2^j, (c+1)/2^j) of the unit interval.
    let mut stack: Vec<(UPoly, BigInt, u64)> = vec![(q, BigInt::zero(), 0)];
    while let Some((q, c, j)) = stack.pop() {
        let v = descartes_01(&q);
        if v == 0 {
            continue;
        }
        let den = BigInt::one() << j;
        if v == 1 {
            let lo = BigRational::new(c.clone(), den.clone()) * &scale;
            let hi = BigRational::new(&c + 1, den) * &scale;
            intervals.push((lo, hi));
            continue;
        }
        let mut left = q.scale_half(1);
        strip_pow2(&mut left);
        let mut right = left.taylor_shift1();
        if right.0[0].is_zero() {
            let mid = BigRational::new(&c * 2 + 1, &den * 2) * &scale;
            rationals.push(mid);
            right = right.strip_zero_roots().0;
        }
        stack.push((right, &c * 2 + 1, j + 1));
        stack.push((left, &c * 2, j + 1));
    }
    (rationals, intervals)
}

/// Smallest-denominator rational strictly between `lo < hi`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(lo < hi);
    if lo.is_negative() && hi.is_positive() {
        return BigRational::zero();
    }
    if !hi.is_positive() {
        return -simplest_between(&-hi, &-lo);
    }
    let fl = lo.floor();
    let next = &fl + rat(1);
    if &next < hi {
        return next;
    }
    let one = rat(1);
    if &fl == lo {
        let y = (&one / (hi - &fl)).floor() + rat(1);
        return fl + one / y;
    }
    let y = simplest_between(&(&one / (hi - &fl)), &(&one / (lo - &fl)));
    fl + one / y
}

enum Classified {
    Rational(BigRational),
    Irrational(BigRational, BigRational),
}

/// Width below which `classify` stops looking for a rational root.
const RECOGNITION_BITS: u64 = 128;

/// Decides whether the single root of `p` in `(lo, hi)` is rational. Any
/// rational root `a/b` of an integer polynomial has `b | lc` and `a | p(0)`,
/// and two rationals with denominators at most `|lc|` are at least `1/lc^2`
/// apart, so once the simplest fraction inside has a larger denominator the
/// root is irrational. Refinement stops at width `2^-RECOGNITION_BITS`; a
/// rational root not recognised by then stays in algebraic form, which is
/// still exact.
fn classify(p: &UPoly, lo: BigRational, hi: BigRational) -> Classified {
    let l = p.lc().abs();
    let a0 = p.coeffs()[0].abs();
    let floor = BigRational::new(BigInt::one(), BigInt::one() << RECOGNITION_BITS);
    let mut r = IsolatedRoot { defpoly: p.clone(), lo, hi };
    let mut tested: Option<BigRational> = None;
    loop {
        let f = simplest_between(&r.lo, &r.hi);
        if f.denom() > &l {
            return Classified::Irrational(r.lo, r.hi);
        }
        if tested.as_ref() != Some(&f) {
            let divides = l.is_multiple_of(f.denom()) && (f.numer().is_zero() || a0.is_multiple_of(f.numer()));
            if divides && p.sign_at(&f) == Sign::NoSign {
                return Classified::Rational(f);
            }
            tested = Some(f);
        }
        if r.width() < floor {
            return Classified::Irrational(r.lo, r.hi);
        }
        for _ in 0..8 {
            let mid = (&r.lo + &r.hi) / rat(2);
            if p.sign_at(&mid) == Sign::NoSign {
                return Classified::Rational(mid);
            }
            r.bisect();
        }
    }
}

fn to_upoly(p: &Polynomial) -> Result<UPoly> {
    if p.is_zero() {
        return Err(Error::Degenerate("zero polynomial has infinitely many roots".into()));
    }
    let vars = p.vars();
    if vars.len() > 1 {
        return Err(Error::Degenerate(format!("not univariate: {p}")));
    }
    let v = vars.last().unwrap_or(Var::Z);
    Ok(UPoly::from_zpoly(p.primitive_z(), v).unwrap())
}

/// All distinct real roots of a univariate polynomial.
pub fn isolate_real_roots(p: &Polynomial) -> Result<RootSet> {
    let u = to_upoly(p)?;
    Ok(isolate_upoly(&u))
}

pub fn isolate_upoly(u: &UPoly) -> RootSet {
    if u.degree() <= 0 {
        return RootSet::empty();
    }
    let sq = squarefree(u);
    let (sq, zero_mult) = sq.strip_zero_roots();
    let mut rationals: Vec<BigRational> = Vec::new();
    if zero_mult > 0 {
        rationals.push(BigRational::zero());
    }
    let mut intervals = Vec::new();
    if sq.degree() > 0 {
        let (pr, pi) = isolate_positive(&sq);
        rationals.extend(pr);
        intervals.extend(pi);
        let (nr, ni) = isolate_positive(&sq.reflect());
        rationals.extend(nr.into_iter().map(|r| -r));
        intervals.extend(ni.into_iter().map(|(lo, hi)| (-hi, -lo)));
    }
    let mut defpoly = sq;
    let divide_out = |d: &mut UPoly, r: &BigRational| {
        let lin = UPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        *d = d.div_exact(&lin).expect("rational root divides");
    };
    for r in &rationals {
        if !r.is_zero() {
            divide_out(&mut defpoly, r);
        }
    }
    let mut pending = Vec::new();
    for (lo, hi) in intervals {
        match classify(&defpoly, lo, hi) {
            Classified::Rational(r) => {
                divide_out(&mut defpoly, &r);
                rationals.push(r);
            }
            Classified::Irrational(lo, hi) => pending.push((lo, hi)),
        }
    }
    let defpoly = defpoly.primitive();
    let mut out: Vec<AlgebraicNumber> = rationals.into_iter().map(AlgebraicNumber::Rational).collect();
    out.extend(pending.into_iter().map(|(lo, hi)| {
        AlgebraicNumber::Algebraic(IsolatedRoot { defpoly: defpoly.clone(), lo, hi })
    }));
    RootSet::from_unsorted(out)
}

/// Number of roots of `g` in the open interval `(lo, hi)` bounded by
/// Descartes' rule after mapping the interval onto `(0, inf)`; exact when 0 or 1.
pub fn descartes_bound(g: &UPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let q = lo.denom().lcm(hi.denom());
    let a = (lo * BigRational::from_integer(q.clone())).to_integer();
    let b = (hi * BigRational::from_integer(q.clone())).to_integer();
    let n = g.degree();
    if n <= 0 {
        return 0;
    }
    // G(y) = q^n g((a + (b - a) y) / q)
    let lin = UPoly::new(vec![a.clone(), &b - &a]);
    let mut acc = UPoly::new(vec![g.lc().clone()]);
    let mut qp = q.clone();
    for c in g.coeffs().iter().rev().skip(1) {
        acc = acc.mul(&lin);
        let add = c * &qp;
        let mut v = acc.0.clone();
        if v.is_empty() {
            v.push(BigInt::zero());
        }
        v[0] += add;
        acc = UPoly::new(v);
        qp *= &q;
    }
    descartes_01(&acc)
}

fn cmp_rational_root(q: &BigRational, r: &IsolatedRoot) -> Ordering {
    if q <= &r.lo {
        return Ordering::Less;
    }
    if q >= &r.hi {
        return Ordering::Greater;
    }
    if r.defpoly.sign_at(q) == Sign::NoSign {
        return Ordering::Equal;
    }
    let mut r = r.clone();
    r.split_at(q);
    if q <= &r.lo {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn has_root_of(g: &UPoly, r: &IsolatedRoot) -> bool {
    sgn(g.sign_at(&r.lo)) != sgn(g.sign_at(&r.hi))
}

fn cmp_roots(a: &IsolatedRoot, b: &IsolatedRoot) -> Ordering {
    if a.hi <= b.lo {
        return Ordering::Less;
    }
    if b.hi <= a.lo {
        return Ordering::Greater;
    }
    let g = if a.defpoly == b.defpoly { a.defpoly.clone() } else { upoly_gcd(&a.defpoly, &b.defpoly) };
    // A common factor vanishing on both intervals may still have two roots
    // in the overlap, so refine until the hull provably holds only one.
    let common = g.degree() > 0 && has_root_of(&g, a) && has_root_of(&g, b);
    let mut a = a.clone();
    let mut b = b.clone();
    loop {
        if a.hi <= b.lo {
            return Ordering::Less;
        }
        if b.hi <= a.lo {
            return Ordering::Greater;
        }
        if common {
            let lo = if a.lo < b.lo { &a.lo } else { &b.lo };
            let hi = if a.hi > b.hi { &a.hi } else { &b.hi };
            if descartes_bound(&g, lo, hi) == 1 {
                return Ordering::Equal;
            }
        }
        if a.width() >= b.width() {
            a.bisect();
        } else {
            b.bisect();
        }
    }
}

/// Exact order of two real algebraic numbers.
pub fn compare(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Ordering {
    use AlgebraicNumber::*;
    match (a, b) {
        (Rational(x), Rational(y)) => x.cmp(y),
        (Rational(x), Algebraic(r)) => cmp_rational_root(x, r),
        (Algebraic(r), Rational(x)) => cmp_rational_root(x, r).reverse(),
        (Algebraic(r), Algebraic(s)) => cmp_roots(r, s),
    }
}

/// Sorted, deduplicated union.
pub fn merge(sets: &[&RootSet]) -> RootSet {
    let mut all = Vec::new();
    for s in sets {
        all.extend(s.elems.iter().cloned());
    }
    RootSet::from_unsorted(all)
}

/// Exact sign of `p` at `a` (`-1`, `0` or `1`).
pub fn sign_at(p: &Polynomial, a: &AlgebraicNumber) -> Result<i8> {
    if p.is_zero() {
        return Ok(0);
    }
    let u = to_upoly(p)?;
    let s = sgn(p.scale().numer().sign());
    Ok(s * sign_upoly_at(&u, a))
}

pub fn sign_upoly_at(u: &UPoly, a: &AlgebraicNumber) -> i8 {
    match a {
        AlgebraicNumber::Rational(q) => sgn(u.sign_at(q)),
        AlgebraicNumber::Algebraic(r) => {
            if u.degree() <= 0 {
                return sgn(u.0.first().map(|c| c.sign()).unwrap_or(Sign::NoSign));
            }
            let g = upoly_gcd(u, &r.defpoly);
            if g.degree() > 0 && has_root_of(&g, r) {
                return 0;
            }
            let mut r = r.clone();
            while descartes_bound(u, &r.lo, &r.hi) > 0 {
                r.bisect();
            }
            let mid = (&r.lo + &r.hi) / rat(2);
            sgn(u.sign_at(&mid))
        }
    }
}

/// A rational sample point for one cell of the partition induced by a root set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representative {
    pub value: BigRational,
    /// Singleton cell; `value` approximates the root itself.
    pub at_root: bool,
    /// Upper bound on `|value - root|` for singleton cells (zero when exact).
    pub offset: BigRational,
}

/// One rational inside every open cell, plus approximations of each root
/// within `2^-20`. Output alternates open cell / singleton and starts and ends
/// with the unbounded cells.
pub fn pick_representatives(roots: &RootSet) -> Vec<Representative> {
    let tol = BigRational::new(BigInt::one(), BigInt::one() << 20u32);
    let open = |v: BigRational| Representative { value: v, at_root: false, offset: BigRational::zero() };
    if roots.is_empty() {
        return vec![open(BigRational::zero())];
    }
    let refined: Vec<AlgebraicNumber> = separate(&roots.elems);
    let mut out = Vec::new();
    let (lo0, _) = refined[0].bounds();
    out.push(open(lo0.floor() - rat(1)));
    for (i, a) in refined.iter().enumerate() {
        let (v, off) = match a {
            AlgebraicNumber::Rational(q) => (q.clone(), BigRational::zero()),
            AlgebraicNumber::Algebraic(_) => {
                let (lo, hi) = a.refined(&tol).bounds();
                ((&lo + &hi) / rat(2), (&hi - &lo) / rat(2))
            }
        };
        out.push(Representative { value: v, at_root: true, offset: off });
        if i + 1 < refined.len() {
            let (_, hi) = a.bounds();
            let (lo, _) = refined[i + 1].bounds();
            out.push(open(simplest_between(&hi, &lo)));
        }
    }
    let (_, hin) = refined.last().unwrap().bounds();
    out.push(open(hin.floor() + rat(1)));
    out
}

/// Refines neighbours until consecutive isolating intervals are disjoint with a gap.
fn separate(elems: &[AlgebraicNumber]) -> Vec<AlgebraicNumber> {
    let mut v: Vec<AlgebraicNumber> = elems.to_vec();
    for i in 0..v.len().saturating_sub(1) {
        loop {
            let (_, ahi) = v[i].bounds();
            let (blo, _) = v[i + 1].bounds();
            if ahi < blo {
                break;
            }
            let wa = v[i].bounds();
            let wb = v[i + 1].bounds();
            let (wa, wb) = (&wa.1 - &wa.0, &wb.1 - &wb.0);
            if wa >= wb {
                v[i] = v[i].refined(&(wa / rat(2)));
            } else {
                v[i + 1] = v[i + 1].refined(&(wb / rat(2)));
            }
        }
    }
    v
}

/// Convenience: roots of an integer polynomial in `z` given as a ZPoly.
pub fn roots_of_z(p: &ZPoly) -> Result<RootSet> {
    isolate_real_roots(&Polynomial::from_zpoly(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(c: &[i64]) -> Polynomial {
        Polynomial::from_zpoly(UPoly::from_i64(c).to_zpoly(Var::Z))
    }
    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn factorable_quadratic() {
        let r = isolate_real_roots(&up(&[-1, 0, 1])).unwrap();
        assert_eq!(r.elems, vec![AlgebraicNumber::integer(-1), AlgebraicNumber::integer(1)]);
    }

    #[test]
    fn non_dyadic_rationals_recognised() {
        // (3z + 16)(3z - 16)(z^2 - 27)
        let p = &up(&[-256, 0, 9]) * &up(&[-27, 0, 1]);
        let r = isolate_real_roots(&p).unwrap();
        assert_eq!(r.len(), 4);
        assert_eq!(r.elems[0], AlgebraicNumber::Rational(q(-16, 3)));
        assert_eq!(r.elems[3], AlgebraicNumber::Rational(q(16, 3)));
        assert_eq!(r.elems[1].kind(), Kind::Algebraic);
    }

    #[test]
    fn zero_and_constant() {
        assert!(isolate_real_roots(&Polynomial::zero()).is_err());
        assert!(isolate_real_roots(&Polynomial::integer(5)).unwrap().is_empty());
    }

    #[test]
    fn equal_under_different_defpolys() {
        let a = AlgebraicNumber::from_isolating(&up(&[-2, 0, 1]), q(1, 1), q(2, 1)).unwrap();
        let b = AlgebraicNumber::from_isolating(&up(&[-4, 0, 2]), q(14, 10), q(15, 10)).unwrap();
        assert_eq!(compare(&a, &b), Ordering::Equal);
        let m = merge(&[&RootSet { elems: vec![a] }, &RootSet { elems: vec![b] }]);
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn simplest_fraction() {
        assert_eq!(simplest_between(&q(1, 3), &q(1, 2)), q(2, 5));
        assert_eq!(simplest_between(&q(-1, 2), &q(1, 2)), q(0, 1));
        assert_eq!(simplest_between(&q(3, 1), &q(7, 2)), q(10, 3));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(rational_to_decimal(&q(-1, 3), 4), "-0.3333");
        assert_eq!(rational_to_decimal(&q(5, 2), 0), "3");
    }
}
