//! Python module `semigroup_mobius`.
//!
//! Errors map to `ValueError`, except arithmetic overflow which maps to
//! `OverflowError`. Möbius values are Python ints.

use pyo3::exceptions::{PyOverflowError, PyValueError};
use pyo3::prelude::*;

use smobius_core::closed;
use smobius_core::harness::suites::{self, Bound as GridBound, Suite};
use smobius_core::harness::{self, auto_method};
use smobius_core::{Evaluator, Method, MobiusError, Mu, Representation};

fn py_err(e: MobiusError) -> PyErr {
    match e {
        MobiusError::Overflow => PyOverflowError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for smobius_core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn parse_method(s: &smobius_core::NumericalSemigroup, name: &str) -> PyResult<Method> {
    if name == "auto" {
        return Ok(auto_method(s));
    }
    name.parse().py()
}

/// A numerical semigroup given by generators with gcd 1.
#[pyclass(name = "Semigroup", module = "semigroup_mobius", frozen)]
struct PySemigroup {
    inner: smobius_core::NumericalSemigroup,
}

#[pymethods]
impl PySemigroup {
    #[new]
    fn new(generators: Vec<i64>) -> PyResult<Self> {
        Ok(Self {
            inner: smobius_core::NumericalSemigroup::new(&generators).py()?,
        })
    }

    #[getter]
    fn generators(&self) -> Vec<i64> {
        self.inner.generators().to_vec()
    }

    #[getter]
    fn multiplicity(&self) -> i64 {
        self.inner.multiplicity()
    }

    fn minimal_generators(&self) -> Vec<i64> {
        self.inner.minimal_generators()
    }

    fn contains(&self, x: i64) -> bool {
        self.inner.contains(x)
    }

    fn __contains__(&self, x: i64) -> bool {
        self.inner.contains(x)
    }

    /// Sorted Apéry set with respect to `m` (default: the multiplicity).
    #[pyo3(signature = (m=None))]
    fn apery_set(&self, m: Option<i64>) -> PyResult<Vec<i64>> {
        self.inner
            .apery_set(m.unwrap_or(self.inner.multiplicity()))
            .py()
    }

    fn as_arithmetic(&self) -> Option<PyArithmetic> {
        self.inner
            .as_arithmetic()
            .map(|inner| PyArithmetic { inner })
    }

    /// Name of the method `method="auto"` resolves to.
    fn auto_method(&self) -> &'static str {
        auto_method(&self.inner).name()
    }

    /// `mu_S(x)`; `method` is one of auto, chains, recursive, deddens, arith, even.
    #[pyo3(signature = (x, method="auto"))]
    fn mobius(&self, x: i64, method: &str) -> PyResult<Mu> {
        let m = parse_method(&self.inner, method)?;
        Evaluator::new(&self.inner, m).py()?.mobius(x).py()
    }

    /// `[mu_S(x) for x in range(start, stop)]`.
    #[pyo3(signature = (start, stop, method="auto"))]
    fn mobius_range(&self, start: i64, stop: i64, method: &str) -> PyResult<Vec<Mu>> {
        let m = parse_method(&self.inner, method)?;
        let mut e = Evaluator::new(&self.inner, m).py()?;
        (start..stop)
            .map(|x| e.mobius(x))
            .collect::<smobius_core::Result<_>>()
            .py()
    }

    /// Number of chains of length `l` from 0 to `x`.
    fn count_chains(&self, x: i64, l: usize) -> PyResult<u64> {
        Ok(smobius_core::count_chains(&self.inner, x, l).py()?.0)
    }

    fn __repr__(&self) -> String {
        format!("Semigroup({:?})", self.inner.generators())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// `<a, a+d, ..., a+kd>` with `gcd(a, d) = 1` and `1 <= k <= a-1`.
#[pyclass(
    name = "ArithmeticSemigroup",
    module = "semigroup_mobius",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyArithmetic {
    inner: smobius_core::ArithmeticParams,
}

#[pymethods]
impl PyArithmetic {
    #[new]
    fn new(a: i64, d: i64, k: i64) -> PyResult<Self> {
        Ok(Self {
            inner: smobius_core::ArithmeticParams::new(a, d, k).py()?,
        })
    }

    #[getter]
    fn a(&self) -> i64 {
        self.inner.a()
    }

    #[getter]
    fn d(&self) -> i64 {
        self.inner.d()
    }

    #[getter]
    fn k(&self) -> i64 {
        self.inner.k()
    }

    fn semigroup(&self) -> PySemigroup {
        PySemigroup {
            inner: self.inner.semigroup(),
        }
    }

    fn contains(&self, x: i64) -> bool {
        self.inner.contains(x)
    }

    /// Apéry set w.r.t. `a`, indexed by `i` (not sorted).
    fn apery(&self) -> PyResult<Vec<i64>> {
        self.inner.apery().py()
    }

    /// Normal form `(x0, i, xi, xk)` of `x`.
    fn decompose(&self, x: i64) -> PyResult<(i64, i64, i64, i64)> {
        let r = self.inner.decompose(x).py()?;
        Ok((r.x0, r.i, r.xi, r.xk))
    }

    fn compose(&self, x0: i64, i: i64, xi: i64, xk: i64) -> PyResult<i64> {
        self.inner.compose(&Representation { x0, i, xi, xk }).py()
    }

    /// `mu_S(x)` by the arithmetic-sequence recursion (requires `k >= 2`).
    fn mobius(&self, x: i64) -> PyResult<Mu> {
        closed::ArithmeticMobius::new(self.inner)
            .py()?
            .mobius(x)
            .py()
    }

    fn __repr__(&self) -> String {
        format!(
            "ArithmeticSemigroup(a={}, d={}, k={})",
            self.inner.a(),
            self.inner.d(),
            self.inner.k()
        )
    }
}

/// `mu` of `<a, b>` by the periodic closed form.
#[pyfunction]
fn mobius_two_generators(a: i64, b: i64, x: i64) -> PyResult<Mu> {
    closed::mobius_deddens(a, b, x).py()
}

/// `mu` of `<2q, 2q+d, 2q+2d>` by the multiset closed form.
#[pyfunction]
fn mobius_even(q: i64, d: i64, x: i64) -> PyResult<Mu> {
    let p = closed::EvenCaseParams::new(q, d).py()?;
    closed::mobius_even_closed(&p, x).py()
}

/// Rows `x0 = 0..rows` of `mu([x0, 0, x2])` for `<2q, 2q+d, 2q+2d>`.
#[pyfunction]
fn mu_table(q: i64, d: i64, rows: i64) -> PyResult<Vec<Vec<Mu>>> {
    if rows < 1 {
        return Err(PyValueError::new_err("rows must be positive"));
    }
    let p = closed::EvenCaseParams::new(q, d).py()?;
    Ok(harness::mu_table(&p, rows - 1).py()?.rows)
}

/// Runs one verification suite; returns `(passed, checks, failures)`.
#[pyfunction]
#[pyo3(signature = (suite, bound="tiny"))]
fn run_suite(suite: &str, bound: &str) -> PyResult<(bool, u64, Vec<String>)> {
    let suite: Suite = suite.parse().py()?;
    let bound: GridBound = bound.parse().py()?;
    let outcome = suites::run_suite(suite, bound, 1).py()?;
    Ok((outcome.passed(), outcome.checks, outcome.failures))
}

#[pymodule]
pub fn semigroup_mobius(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySemigroup>()?;
    m.add_class::<PyArithmetic>()?;
    m.add_function(wrap_pyfunction!(mobius_two_generators, m)?)?;
    m.add_function(wrap_pyfunction!(mobius_even, m)?)?;
    m.add_function(wrap_pyfunction!(mu_table, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
