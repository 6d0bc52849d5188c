//! Point clouds of individual curves and a rough connectivity signature.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::family::ParametrizedFamily;
use crate::poly::{RationalFunction, Var};
use crate::realroots::{compare, isolate_real_roots, ratio_to_f64, AlgebraicNumber, RootSet};

#[derive(Clone, Debug)]
pub struct SampleOptions {
    pub grid: usize,
    /// Samples cover `t` in `[-window, window]`.
    pub window: BigRational,
    /// Points closer than this are glued together.
    pub snap: BigRational,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions {
            grid: 2048,
            window: BigRational::from_integer(50.into()),
            snap: BigRational::new(1.into(), 4.into()),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SamplePoint {
    /// `None` for the limit point at `t = infinity`.
    pub t: Option<BigRational>,
    pub x: BigRational,
    pub y: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TopologySignature {
    pub components: usize,
    pub self_intersections: usize,
}

fn eval_t(f: &RationalFunction, t: &BigRational) -> Option<BigRational> {
    let d = f.den().eval_all(&[(Var::T, t.clone())]);
    if d.is_zero() {
        return None;
    }
    Some(f.num().eval_all(&[(Var::T, t.clone())]) / d)
}

/// The limit of `num/den` as `t -> infinity`, when finite.
fn limit_at_infinity(f: &RationalFunction) -> Option<BigRational> {
    let (dn, dd) = (f.num().degree(Var::T), f.den().degree(Var::T));
    if dn > dd {
        return None;
    }
    if dn < dd {
        return Some(BigRational::zero());
    }
    let a = f.num().lcoeff_in(Var::T).constant_value()?;
    let b = f.den().lcoeff_in(Var::T).constant_value()?;
    Some(a / b)
}

/// Exact points of the curve at parameter `lambda` on a uniform `t` grid,
/// skipping poles, plus the point at `t = infinity` when it is finite.
pub fn sample_curve(fam: &ParametrizedFamily, lambda: &BigRational, opts: &SampleOptions) -> Vec<SamplePoint> {
    let Ok(u) = fam.u.eval(Var::Z, lambda) else { return Vec::new() };
    let Ok(v) = fam.v.eval(Var::Z, lambda) else { return Vec::new() };
    let n = opts.grid.max(2);
    let step = &opts.window * BigRational::from_integer(2.into()) / BigRational::from_integer(BigInt::from(n - 1));
    let mut pts: Vec<SamplePoint> = (0..n)
        .into_par_iter()
        .filter_map(|i| {
            let t = -&opts.window + &step * BigRational::from_integer(BigInt::from(i));
            Some(SamplePoint { x: eval_t(&u, &t)?, y: eval_t(&v, &t)?, t: Some(t) })
        })
        .collect();
    if let (Some(x), Some(y)) = (limit_at_infinity(&u), limit_at_infinity(&v)) {
        pts.push(SamplePoint { t: None, x, y });
    }
    pts
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut i = i;
        while self.0[i] != r {
            let next = self.0[i];
            self.0[i] = r;
            i = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

/// Exact `|p - q| <= snap`; the floating-point distance settles all but borderline pairs.
fn close(p: &SamplePoint, q: &SamplePoint, pf: (f64, f64), qf: (f64, f64), snap2: &BigRational, snap2_f: f64) -> bool {
    let d2 = (pf.0 - qf.0).powi(2) + (pf.1 - qf.1).powi(2);
    if d2 < snap2_f * (1.0 - 1e-9) {
        return true;
    }
    if d2 > snap2_f * (1.0 + 1e-9) {
        return false;
    }
    let dx = &p.x - &q.x;
    let dy = &p.y - &q.y;
    &(&dx * &dx + &dy * &dy) <= snap2
}

fn cell_of(p: &SamplePoint, snap: f64) -> (i64, i64) {
    let f = |q: &BigRational| (ratio_to_f64(q) / snap).floor().clamp(-1e15, 1e15) as i64;
    (f(&p.x), f(&p.y))
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> Option<(f64, f64)> {
    let d1 = cross(c, d, a);
    let d2 = cross(c, d, b);
    let d3 = cross(a, b, c);
    let d4 = cross(a, b, d);
    if d1 * d2 < 0.0 && d3 * d4 < 0.0 {
        let s = d1 / (d1 - d2);
        return Some((a.0 + s * (b.0 - a.0), a.1 + s * (b.1 - a.1)));
    }
    None
}

/// Poles of the curve at parameter `lambda`: real roots of `X12 X22`.
pub fn poles(fam: &ParametrizedFamily, lambda: &BigRational) -> RootSet {
    let den = (&fam.x12 * &fam.x22).eval(Var::Z, lambda);
    isolate_real_roots(&den).unwrap_or_else(|_| RootSet::empty())
}

/// Gluing needs the grid spacing; distinct nearby crossings need much less.
pub const CROSSING_SNAP_DIVISOR: f64 = 16.0;

fn pole_between(poles: &RootSet, a: &BigRational, b: &BigRational) -> bool {
    let (a, b) = (AlgebraicNumber::Rational(a.clone()), AlgebraicNumber::Rational(b.clone()));
    poles.iter().any(|p| compare(p, &a) != Ordering::Less && compare(p, &b) != Ordering::Greater)
}

/// Connectivity signature of sampled points: consecutive samples are joined
/// unless a pole separates them, the limit point at infinity is joined to both
/// ends of the grid, points within `snap` are glued (exact
/// comparison), and crossings between non-adjacent segments are counted
/// after merging those within `snap / CROSSING_SNAP_DIVISOR` of each other.
pub fn topology_signature(points: &[SamplePoint], poles: &RootSet, snap: &BigRational) -> TopologySignature {
    let finite: Vec<&SamplePoint> = points.iter().filter(|p| p.t.is_some()).collect();
    if finite.is_empty() {
        return TopologySignature { components: 0, self_intersections: 0 };
    }
    let joined: Vec<bool> = (0..finite.len().saturating_sub(1))
        .map(|i| !pole_between(poles, finite[i].t.as_ref().unwrap(), finite[i + 1].t.as_ref().unwrap()))
        .collect();
    let snap_f = ratio_to_f64(snap);
    let snap2 = snap * snap;
    let snap2_f = snap_f * snap_f;
    let all_f: Vec<(f64, f64)> = points.iter().map(|p| (ratio_to_f64(&p.x), ratio_to_f64(&p.y))).collect();
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        buckets.entry(cell_of(p, snap_f)).or_default().push(i);
    }
    let mut dsu = Dsu((0..points.len()).collect());
    for (i, p) in points.iter().enumerate() {
        let (cx, cy) = cell_of(p, snap_f);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(b) = buckets.get(&(cx + dx, cy + dy)) {
                    for &j in b {
                        if j > i
                            && dsu.find(i) != dsu.find(j)
                            && close(p, &points[j], all_f[i], all_f[j], &snap2, snap2_f)
                        {
                            dsu.union(i, j);
                        }
                    }
                }
            }
        }
    }
    // Finite points come first in `points`, in grid order.
    for (i, &j) in joined.iter().enumerate() {
        if j {
            dsu.union(i, i + 1);
        }
    }
    // A finite limit at t = infinity closes the curve through both ends of the grid.
    if let Some(inf) = points.iter().position(|p| p.t.is_none()) {
        dsu.union(inf, 0);
        dsu.union(inf, finite.len() - 1);
    }
    let mut roots: Vec<usize> = (0..points.len()).map(|i| dsu.find(i)).collect();
    roots.sort_unstable();
    roots.dedup();

    let xy = &all_f[..finite.len()];
    let segs: Vec<usize> = (0..joined.len()).filter(|&i| joined[i]).collect();
    let mut hits: Vec<(f64, f64)> = Vec::new();
    for (k, &i) in segs.iter().enumerate() {
        for &j in &segs[k + 1..] {
            if j <= i + 1 {
                continue;
            }
            if let Some(p) = segments_cross(xy[i], xy[i + 1], xy[j], xy[j + 1]) {
                hits.push(p);
            }
        }
    }
    let radius = snap_f / CROSSING_SNAP_DIVISOR;
    let mut clusters: Vec<(f64, f64)> = Vec::new();
    for h in hits {
        if !clusters.iter().any(|c| ((c.0 - h.0).powi(2) + (c.1 - h.1).powi(2)).sqrt() <= radius) {
            clusters.push(h);
        }
    }
    TopologySignature { components: roots.len(), self_intersections: clusters.len() }
}

/// Decimal rendering with `digits` digits after the point, rounded toward zero.
pub fn decimal(q: &BigRational, digits: u32) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits as usize);
    let n = (q.abs() * BigRational::from_integer(scale.clone())).to_integer();
    let int = &n / &scale;
    let frac = (&n % &scale).to_u64().map(|f| f.to_string()).unwrap_or_else(|| (&n % &scale).to_string());
    let sign = if q.is_negative() && !n.is_zero() { "-" } else { "" };
    if digits == 0 {
        return format!("{sign}{int}");
    }
    format!("{sign}{int}.{frac:0>width$}", width = digits as usize)
}

/// CSV with header `t,x,y`; the point at infinity has `t = inf`.
pub fn to_csv(points: &[SamplePoint], digits: u32) -> String {
    let mut s = String::from("t,x,y\n");
    for p in points {
        let t = p.t.as_ref().map(|t| decimal(t, digits)).unwrap_or_else(|| "inf".into());
        s.push_str(&format!("{t},{},{}\n", decimal(&p.x, digits), decimal(&p.y, digits)));
    }
    s
}
