//! Python bindings for `dyck-core`.
//!
//! Counts come back as Python `int`, exact rationals as
//! `fractions.Fraction`. Bad arguments raise `ValueError`; an internal
//! cross-check failure raises `dyck.ConsistencyError`.

use num_bigint::BigUint;
use num_rational::BigRational;
use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use dyck_core::paths::{EnumLimit, PathWord};
use dyck_core::verify::Suite;
use dyck_core::{CountMethod, DyckError, MultSeq};

create_exception!(dyck, ConsistencyError, PyRuntimeError);

fn to_py_err(err: DyckError) -> PyErr {
    if err.is_consistency_failure() {
        ConsistencyError::new_err(err.to_string())
    } else {
        PyValueError::new_err(err.to_string())
    }
}

fn limit_or_env(limit: Option<u64>) -> EnumLimit {
    limit.map(EnumLimit).unwrap_or_else(EnumLimit::from_env)
}

type Partition = Vec<(u64, u64)>;

#[pyclass(name = "PathWord", module = "dyck", eq, ord, hash, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyPathWord(PathWord);

#[pymethods]
impl PyPathWord {
    #[new]
    fn new(word: &str) -> PyResult<Self> {
        word.parse().map(PyPathWord).map_err(to_py_err)
    }

    #[getter]
    fn m(&self) -> u64 {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> u64 {
        self.0.n()
    }

    fn is_dyck(&self) -> bool {
        self.0.is_dyck()
    }

    fn rotate(&self, s: i64) -> Self {
        PyPathWord(self.0.rotate(s))
    }

    fn period(&self) -> u64 {
        self.0.period()
    }

    fn rotation_class(&self) -> Vec<Self> {
        self.0.rotation_class().into_iter().map(PyPathWord).collect()
    }

    fn canonical_dyck(&self) -> Self {
        PyPathWord(self.0.canonical_dyck())
    }

    fn shape(&self) -> PyResult<Vec<u64>> {
        self.0
            .shape()
            .map(|s| s.parts().to_vec())
            .map_err(to_py_err)
    }

    fn type_of(&self) -> PyResult<PyMultSeq> {
        self.0.type_of().map(PyMultSeq).map_err(to_py_err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PathWord('{}')", self.0)
    }
}

#[pyclass(name = "MultSeq", module = "dyck", eq, ord, hash, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct PyMultSeq(MultSeq);

#[pymethods]
impl PyMultSeq {
    #[new]
    fn new(entries: Vec<u64>) -> Self {
        PyMultSeq(MultSeq::new(entries))
    }

    #[staticmethod]
    fn from_parts(parts: Vec<u64>) -> PyResult<Self> {
        if parts.contains(&0) {
            return Err(PyValueError::new_err("parts must be positive"));
        }
        Ok(PyMultSeq(MultSeq::from_parts(&parts)))
    }

    #[getter]
    fn entries(&self) -> Vec<u64> {
        self.0.entries().to_vec()
    }

    fn part_multiplicities(&self) -> Partition {
        self.0.part_multiplicities()
    }

    fn norm(&self) -> u64 {
        self.0.norm()
    }

    fn size(&self) -> u64 {
        self.0.size()
    }

    fn support_len(&self) -> usize {
        self.0.support_len()
    }

    fn h(&self) -> BigUint {
        self.0.h()
    }

    fn below_set(&self, j: u64) -> PyResult<Vec<Self>> {
        dyck_core::below_set(&self.0, j)
            .map(|it| it.map(PyMultSeq).collect())
            .map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!("MultSeq({:?})", self.0.entries())
    }
}

#[pyfunction]
fn binomial(n: u64, k: i64) -> BigUint {
    dyck_core::binomial(n, k)
}

#[pyfunction]
fn a_value(m: u64, n: u64) -> PyResult<BigRational> {
    dyck_core::a_value(m, n).map_err(to_py_err)
}

/// `method` is one of auto, main, recurrence, coprime, fuss, duchon, oracle.
#[pyfunction]
#[pyo3(signature = (m, n, method = "auto"))]
fn count(m: u64, n: u64, method: &str) -> PyResult<BigUint> {
    let method = match method {
        "auto" => CountMethod::Main,
        other => other.parse().map_err(PyValueError::new_err)?,
    };
    dyck_core::count(m, n, method)
        .map(|r| r.value)
        .map_err(to_py_err)
}

/// Returns `(value, [(partition, term), ...])`.
#[pyfunction]
fn count_main(m: u64, n: u64) -> PyResult<(BigUint, Vec<(Partition, BigRational)>)> {
    let result = dyck_core::count_main(m, n).map_err(to_py_err)?;
    let terms = result
        .terms
        .unwrap_or_default()
        .into_iter()
        .map(|(a, t)| (a.part_multiplicities(), t))
        .collect();
    Ok((result.value, terms))
}

#[pyfunction]
fn count_recurrence(m: u64, n: u64) -> PyResult<BigUint> {
    dyck_core::count_recurrence(m, n).map_err(to_py_err)
}

#[pyfunction]
fn count_coprime(m: u64, n: u64) -> PyResult<BigUint> {
    dyck_core::count_coprime(m, n).map_err(to_py_err)
}

#[pyfunction]
fn count_fuss(k: u64, n: u64) -> PyResult<BigUint> {
    dyck_core::count_fuss(k, n).map_err(to_py_err)
}

#[pyfunction]
fn count_duchon(l: u64) -> PyResult<BigUint> {
    dyck_core::count_duchon(l).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (m, n, strict = false))]
fn count_dp(m: u64, n: u64, strict: bool) -> BigUint {
    dyck_core::count_dp(m, n, strict)
}

#[pyfunction]
fn catalan_sequence(nmax: u64) -> Vec<BigUint> {
    dyck_core::catalan_sequence(nmax)
}

#[pyfunction]
fn primitive_counts(p: u64, q: u64, dmax: u64) -> PyResult<Vec<BigUint>> {
    dyck_core::primitive_counts(p, q, dmax).map_err(to_py_err)
}

#[pyfunction]
#[pyo3(signature = (m, n, limit = None))]
fn enumerate_paths(m: u64, n: u64, limit: Option<u64>) -> PyResult<Vec<PyPathWord>> {
    dyck_core::enumerate_paths(m, n, limit_or_env(limit))
        .map(|it| it.map(PyPathWord).collect())
        .map_err(to_py_err)
}

/// Returns `[(type, period, count), ...]` with types as `(part, multiplicity)` pairs.
#[pyfunction]
#[pyo3(signature = (m, n, limit = None))]
fn census(m: u64, n: u64, limit: Option<u64>) -> PyResult<Vec<(Partition, u64, BigUint)>> {
    let records = dyck_core::census(m, n, limit_or_env(limit)).map_err(to_py_err)?;
    Ok(records
        .into_iter()
        .map(|r| (r.path_type.part_multiplicities(), r.period, r.count))
        .collect())
}

#[pyfunction]
fn sequences_with_norm(d: u64) -> Vec<PyMultSeq> {
    dyck_core::sequences_with_norm(d).map(PyMultSeq).collect()
}

#[pyfunction]
fn check_hh_identity(c: &PyMultSeq, j: u64) -> PyResult<bool> {
    dyck_core::check_hh_identity(&c.0, j).map_err(to_py_err)
}

#[pyfunction]
fn check_coef_identity(d: u64, xs: Vec<BigRational>) -> PyResult<bool> {
    dyck_core::check_coef_identity(d, &xs).map_err(to_py_err)
}

#[pyfunction]
fn check_catalan_reduction(n: u64, i: u64) -> PyResult<bool> {
    dyck_core::check_catalan_reduction(n, i).map_err(to_py_err)
}

#[pyfunction]
fn check_fuss_recurrence(k: u64, n: u64) -> PyResult<bool> {
    dyck_core::check_fuss_recurrence(k, n).map_err(to_py_err)
}

/// Runs one identity suite; returns `[(label, passed, detail), ...]`.
#[pyfunction]
#[pyo3(signature = (suite, limit = None))]
fn verify(suite: &str, limit: Option<u64>) -> PyResult<Vec<(String, bool, String)>> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    Ok(suite
        .run(limit)
        .into_iter()
        .map(|o| (o.label, o.passed, o.detail))
        .collect())
}

#[pymodule]
fn dyck(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ConsistencyError", m.py().get_type::<ConsistencyError>())?;
    m.add_class::<PyPathWord>()?;
    m.add_class::<PyMultSeq>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(a_value, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(count_main, m)?)?;
    m.add_function(wrap_pyfunction!(count_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(count_coprime, m)?)?;
    m.add_function(wrap_pyfunction!(count_fuss, m)?)?;
    m.add_function(wrap_pyfunction!(count_duchon, m)?)?;
    m.add_function(wrap_pyfunction!(count_dp, m)?)?;
    m.add_function(wrap_pyfunction!(catalan_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(primitive_counts, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_paths, m)?)?;
    m.add_function(wrap_pyfunction!(census, m)?)?;
    m.add_function(wrap_pyfunction!(sequences_with_norm, m)?)?;
    m.add_function(wrap_pyfunction!(check_hh_identity, m)?)?;
    m.add_function(wrap_pyfunction!(check_coef_identity, m)?)?;
    m.add_function(wrap_pyfunction!(check_catalan_reduction, m)?)?;
    m.add_function(wrap_pyfunction!(check_fuss_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
