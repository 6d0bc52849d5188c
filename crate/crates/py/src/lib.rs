//! Python bindings: `import critcurve`.

use std::str::FromStr;

use critcurve_core::check::{run_check, CheckReport};
use critcurve_core::critical::{run_critical, CriticalReport};
use critcurve_core::family::{shear, translate_parameter, ParametrizedFamily};
use critcurve_core::implicit::{implicitize, oracle as implicit_oracle, ComplexityGuard};
use critcurve_core::parse::{parse_family, parse_family_str};
use critcurve_core::realroots::{AlgebraicNumber, RootSet};
use critcurve_core::reduce::reduce_critical_set;
use critcurve_core::sample::{poles, sample_curve, topology_signature, SampleOptions};
use critcurve_core::Error;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

create_exception!(critcurve, CritcurveError, PyException);
create_exception!(critcurve, ImproperError, CritcurveError);
create_exception!(critcurve, HypothesisError, CritcurveError);
create_exception!(critcurve, ComplexityGuardError, CritcurveError);
create_exception!(critcurve, InternalError, CritcurveError);

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Improper => ImproperError::new_err(msg),
        Error::Hypothesis(_) => HypothesisError::new_err(msg),
        Error::ComplexityGuard(_) => ComplexityGuardError::new_err(msg),
        Error::Internal(_) => InternalError::new_err(msg),
        Error::Parse { .. } | Error::ZeroDenominator | Error::InvalidFamily(_) | Error::Degenerate(_) => {
            PyValueError::new_err(msg)
        }
    }
}

fn rational(s: &str) -> PyResult<BigRational> {
    BigRational::from_str(s.trim()).map_err(|_| PyValueError::new_err(format!("not a rational number: {s:?}")))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A real algebraic number: a root of an integer polynomial isolated in an interval.
#[pyclass(module = "critcurve", name = "Root", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRoot {
    inner: AlgebraicNumber,
    param: String,
}

#[pymethods]
impl PyRoot {
    /// Exact value as `p/q` when rational, otherwise `None`.
    #[getter]
    fn rational(&self) -> Option<String> {
        self.inner.as_rational().map(|q| q.to_string())
    }

    /// Defining polynomial in the family parameter.
    #[getter]
    fn defpoly(&self) -> String {
        let mut names = critcurve_core::poly::DEFAULT_NAMES;
        names[critcurve_core::Var::Z.index()] = &self.param;
        self.inner.defpoly().display_with(&names)
    }

    #[getter]
    fn interval(&self) -> (String, String) {
        let (lo, hi) = self.inner.bounds();
        (lo.to_string(), hi.to_string())
    }

    fn decimal(&self, digits: u32) -> String {
        self.inner.approx_decimal(digits)
    }

    fn __float__(&self) -> f64 {
        self.inner.to_f64()
    }

    fn __repr__(&self) -> String {
        match self.inner.as_rational() {
            Some(q) => format!("Root({q})"),
            None => format!("Root(~{})", self.inner.approx_decimal(10)),
        }
    }
}

fn roots(s: &RootSet, param: &str) -> Vec<PyRoot> {
    s.iter().map(|a| PyRoot { inner: a.clone(), param: param.to_string() }).collect()
}

/// A one-parameter family of rational plane curves `(u(t), v(t))`.
#[pyclass(module = "critcurve", name = "Family", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyFamily {
    inner: ParametrizedFamily,
}

#[pymethods]
impl PyFamily {
    #[new]
    #[pyo3(signature = (u, v, param = "L"))]
    fn new(u: &str, v: &str, param: &str) -> PyResult<Self> {
        let text = format!("param: {param}\nu = {u}\nv = {v}\n");
        parse_family_str(&text).map(|inner| PyFamily { inner }).map_err(to_py)
    }

    /// Parse the contents of a family file.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        parse_family_str(text).map(|inner| PyFamily { inner }).map_err(to_py)
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        parse_family(&path).map(|inner| PyFamily { inner }).map_err(to_py)
    }

    #[getter]
    fn param(&self) -> String {
        self.inner.param.clone()
    }

    #[getter]
    fn u(&self) -> String {
        self.inner.u.display_with(&self.inner.names())
    }

    #[getter]
    fn v(&self) -> String {
        self.inner.v.display_with(&self.inner.names())
    }

    /// `(m, n, r, s)`: t-degrees of the numerators and denominators of u and v.
    #[getter]
    fn degrees(&self) -> (u32, u32, u32, u32) {
        (self.inner.m, self.inner.n, self.inner.r, self.inner.s)
    }

    /// The family `(u + mu v, v)`.
    fn shear(&self, mu: &str) -> PyResult<Self> {
        shear(&self.inner, &rational(mu)?).map(|inner| PyFamily { inner }).map_err(to_py)
    }

    /// The family with the parameter replaced by `param - c`.
    fn translate(&self, c: &str) -> PyResult<Self> {
        translate_parameter(&self.inner, &rational(c)?).map(|inner| PyFamily { inner }).map_err(to_py)
    }

    /// Implicit equation `F(x, y, z)` of the surface swept by the family.
    fn implicit(&self) -> PyResult<String> {
        let f = implicitize(&self.inner).map_err(to_py)?;
        Ok(f.display_with(&self.inner.names()))
    }

    fn to_text(&self) -> String {
        self.inner.to_spec_text()
    }

    fn __repr__(&self) -> String {
        format!("Family(u={:?}, v={:?}, param={:?})", self.u(), self.v(), self.inner.param)
    }
}

/// Hypotheses and special parameter values.
#[pyclass(module = "critcurve", name = "CheckResult", frozen)]
struct PyCheck {
    inner: CheckReport,
    param: String,
}

#[pymethods]
impl PyCheck {
    #[getter]
    fn h1(&self) -> bool {
        self.inner.h1_holds
    }

    #[getter]
    fn h2(&self) -> bool {
        self.inner.h2_holds
    }

    /// Shear applied to restore the second hypothesis, if any.
    #[getter]
    fn shear_applied(&self) -> Option<String> {
        self.inner.shear_applied.as_ref().map(|m| m.to_string())
    }

    #[getter]
    fn case(&self) -> &'static str {
        self.inner.case.label()
    }

    #[getter]
    fn delta(&self) -> Option<u32> {
        self.inner.delta
    }

    #[getter]
    fn spec(&self) -> Vec<PyRoot> {
        roots(&self.inner.spec(), &self.param)
    }

    /// `[spec0, spec1, spec2, spec3]`.
    #[getter]
    fn spec_parts(&self) -> Vec<Vec<PyRoot>> {
        let c = &self.inner;
        [&c.spec0, &c.spec1, &c.spec2, &c.spec3].iter().map(|s| roots(s, &self.param)).collect()
    }
}

/// A critical set with the source of each element.
#[pyclass(module = "critcurve", name = "CriticalResult", frozen)]
struct PyCritical {
    inner: CriticalReport,
    param: String,
}

#[pymethods]
impl PyCritical {
    #[getter]
    fn roots(&self) -> Vec<PyRoot> {
        roots(&self.inner.set, &self.param)
    }

    /// Sources (`spec0`..`spec3`, `A1`, `A2`) of each element.
    #[getter]
    fn provenance(&self) -> Vec<Vec<&'static str>> {
        self.inner.provenance.iter().map(|v| v.iter().map(|p| p.label()).collect()).collect()
    }

    #[getter]
    fn a1(&self) -> Vec<PyRoot> {
        roots(&self.inner.a1, &self.param)
    }

    #[getter]
    fn a2(&self) -> Vec<PyRoot> {
        roots(&self.inner.a2, &self.param)
    }

    #[getter]
    fn fast(&self) -> Option<Vec<PyRoot>> {
        self.inner.fast.as_ref().map(|s| roots(s, &self.param))
    }

    /// One rational parameter value per cell of the partition, in order;
    /// cells alternate between open intervals and critical values.
    #[getter]
    fn representatives(&self) -> Vec<(String, bool)> {
        self.inner.partition.iter().map(|r| (r.value.to_string(), r.at_root)).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.set.len()
    }
}

#[pyfunction]
#[pyo3(signature = (family, seed = 0))]
fn check(py: Python<'_>, family: &PyFamily, seed: u64) -> PyResult<PyCheck> {
    let fam = family.inner.clone();
    let inner = py.detach(|| run_check(&fam, &mut rng(seed))).map_err(to_py)?;
    Ok(PyCheck { inner, param: fam.param })
}

#[pyfunction]
#[pyo3(signature = (family, seed = 0, fast = false))]
fn critical(py: Python<'_>, family: &PyFamily, seed: u64, fast: bool) -> PyResult<PyCritical> {
    let fam = family.inner.clone();
    let inner = py
        .detach(|| run_check(&fam, &mut rng(seed)).and_then(|c| run_critical(&c, fast)))
        .map_err(to_py)?;
    Ok(PyCritical { inner, param: fam.param })
}

/// Values of `result` that survive `rounds` random shears.
#[pyfunction]
#[pyo3(signature = (family, result, rounds = 1, seed = 0))]
fn reduce(py: Python<'_>, family: &PyFamily, result: &PyCritical, rounds: usize, seed: u64) -> PyResult<Vec<PyRoot>> {
    let fam = family.inner.clone();
    let set = result.inner.set.clone();
    let red = py.detach(|| reduce_critical_set(&fam, &set, rounds, &mut rng(seed))).map_err(to_py)?;
    Ok(roots(&red.set, &fam.param))
}

/// Critical set from the implicit equation. Raises `ComplexityGuardError`
/// when the equation exceeds the limits.
#[pyfunction]
#[pyo3(signature = (family, seed = 0, max_terms = None, max_xy_degree = None))]
fn oracle(
    py: Python<'_>,
    family: &PyFamily,
    seed: u64,
    max_terms: Option<usize>,
    max_xy_degree: Option<u32>,
) -> PyResult<Vec<PyRoot>> {
    let d = ComplexityGuard::default();
    let guard = ComplexityGuard {
        max_terms: max_terms.unwrap_or(d.max_terms),
        max_xy_degree: max_xy_degree.unwrap_or(d.max_xy_degree),
    };
    let fam = family.inner.clone();
    let (_, set) = py.detach(|| implicit_oracle(&fam, &guard, &mut rng(seed))).map_err(to_py)?;
    Ok(roots(&set, &fam.param))
}

/// Points `(x, y)` of the curve at parameter value `value`, plus its
/// sampled `(components, self_intersections)`.
#[pyfunction]
#[pyo3(signature = (family, value, grid = 2048, window = "50", snap = "1/4"))]
#[allow(clippy::type_complexity)]
fn sample(
    py: Python<'_>,
    family: &PyFamily,
    value: &str,
    grid: usize,
    window: &str,
    snap: &str,
) -> PyResult<(Vec<(f64, f64)>, (usize, usize))> {
    let lambda = rational(value)?;
    let opts = SampleOptions { grid, window: rational(window)?, snap: rational(snap)? };
    let fam = family.inner.clone();
    Ok(py.detach(|| {
        let pts = sample_curve(&fam, &lambda, &opts);
        let sig = topology_signature(&pts, &poles(&fam, &lambda), &opts.snap);
        let xy = pts
            .iter()
            .map(|p| (critcurve_core::realroots::ratio_to_f64(&p.x), critcurve_core::realroots::ratio_to_f64(&p.y)))
            .collect();
        (xy, (sig.components, sig.self_intersections))
    }))
}

#[pymodule]
fn critcurve(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyRoot>()?;
    m.add_class::<PyFamily>()?;
    m.add_class::<PyCheck>()?;
    m.add_class::<PyCritical>()?;
    m.add_function(wrap_pyfunction!(check, m)?)?;
    m.add_function(wrap_pyfunction!(critical, m)?)?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add("CritcurveError", py.get_type::<CritcurveError>())?;
    m.add("ImproperError", py.get_type::<ImproperError>())?;
    m.add("HypothesisError", py.get_type::<HypothesisError>())?;
    m.add("ComplexityGuardError", py.get_type::<ComplexityGuardError>())?;
    m.add("InternalError", py.get_type::<InternalError>())?;
    Ok(())
}
