//! Python module `mseqlab`. Field elements cross the boundary as `int`
//! bit vectors (bit i = coefficient of x^i).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde_json::Value;

use mseqlab::dobbertin::{self, make_lparams};
use mseqlab::verify::{self, parse_suites, run_suite};
use mseqlab::zerocount::{self, Method};
use mseqlab::{expsums, sequences, Elem, Error, FieldCtx};

fn err(e: Error) -> PyErr {
    match e {
        Error::Mismatch(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn json_to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    match v {
        Value::Null => Ok(py.None()),
        Value::Bool(b) => b.into_py_any(py),
        Value::Number(n) => match (n.as_i64(), n.as_u64()) {
            (Some(i), _) => i.into_py_any(py),
            (_, Some(u)) => u.into_py_any(py),
            _ => n.as_f64().unwrap_or(f64::NAN).into_py_any(py),
        },
        Value::String(s) => s.into_py_any(py),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(json_to_py(py, item)?)?;
            }
            list.into_py_any(py)
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, json_to_py(py, item)?)?;
            }
            dict.into_py_any(py)
        }
    }
}

fn to_py<T: serde::Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    json_to_py(py, &serde_json::to_value(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?)
}

fn method(name: &str) -> PyResult<Method> {
    match name {
        "brute" => Ok(Method::Brute),
        "kernel" => Ok(Method::Kernel),
        _ => Err(PyValueError::new_err(format!("method must be 'brute' or 'kernel', got {name:?}"))),
    }
}

/// GF(2^m) with its subfield GF(2^k), m = 2k.
#[pyclass(name = "Field", frozen)]
struct PyField {
    ctx: FieldCtx,
}

impl PyField {
    fn elem(&self, x: u32) -> PyResult<Elem> {
        self.ctx.check(Elem(x)).map_err(err)
    }
}

#[pymethods]
impl PyField {
    #[new]
    #[pyo3(signature = (k, modulus = None))]
    fn new(k: u32, modulus: Option<u64>) -> PyResult<Self> {
        Ok(PyField { ctx: FieldCtx::new(k, modulus).map_err(err)? })
    }

    #[getter]
    fn k(&self) -> u32 {
        self.ctx.k()
    }

    #[getter]
    fn m(&self) -> u32 {
        self.ctx.m()
    }

    #[getter]
    fn modulus(&self) -> u64 {
        self.ctx.spec().modulus
    }

    #[getter]
    fn alpha(&self) -> u32 {
        self.ctx.alpha().0
    }

    #[getter]
    fn beta(&self) -> u32 {
        self.ctx.beta().0
    }

    /// The noncube r with r^(2^k+1) = 1, or None when k is even.
    #[getter]
    fn r(&self) -> Option<u32> {
        self.ctx.r().map(|r| r.0)
    }

    fn add(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.ctx.add(self.elem(a)?, self.elem(b)?).0)
    }

    fn mul(&self, a: u32, b: u32) -> PyResult<u32> {
        Ok(self.ctx.mul(self.elem(a)?, self.elem(b)?).0)
    }

    fn inv(&self, a: u32) -> PyResult<u32> {
        Ok(self.ctx.inv(self.elem(a)?).map_err(err)?.0)
    }

    fn pow(&self, a: u32, e: u64) -> PyResult<u32> {
        Ok(self.ctx.pow(self.elem(a)?, e).0)
    }

    fn trace_m(&self, a: u32) -> PyResult<u8> {
        Ok(self.ctx.trace_m(self.elem(a)?))
    }

    fn trace_k(&self, a: u32) -> PyResult<u8> {
        self.ctx.trace_k(self.elem(a)?).map_err(err)
    }

    fn is_subfield(&self, a: u32) -> PyResult<bool> {
        Ok(self.ctx.is_subfield(self.elem(a)?))
    }

    /// Nonzero subfield elements beta^0, beta^1, ...
    fn subfield_nonzero(&self) -> Vec<u32> {
        self.ctx.subfield_nonzero().into_iter().map(|e| e.0).collect()
    }

    fn __repr__(&self) -> String {
        format!("Field(k={}, modulus=0x{:x})", self.ctx.k(), self.ctx.spec().modulus)
    }
}

/// Distribution of C_d(tau) as {value: count}.
#[pyfunction]
fn crosscorr_distribution(field: &PyField, d: u64) -> PyResult<std::collections::BTreeMap<i64, u64>> {
    Ok(sequences::crosscorr_distribution(&field.ctx, d).map_err(err)?.entries)
}

/// C_d(tau) for tau = 0 .. 2^k - 2.
#[pyfunction]
fn crosscorr_all(field: &PyField, d: u64) -> PyResult<Vec<i64>> {
    sequences::crosscorr_all(&field.ctx, d).map_err(err)
}

/// Sum and sum of squares of C_d(tau) with their expected values.
#[pyfunction]
fn moment_check(py: Python<'_>, field: &PyField, d: u64) -> PyResult<Py<PyAny>> {
    to_py(py, &sequences::moment_check(&field.ctx, d).map_err(err)?)
}

/// [(a, S(a))] over the nonzero subfield elements.
#[pyfunction]
fn s_spectrum(field: &PyField, d: u64) -> PyResult<Vec<(u32, i64)>> {
    Ok(expsums::s_all_wht(&field.ctx, d).map_err(err)?.into_iter().map(|(a, s)| (a.0, s)).collect())
}

/// S(a) by direct summation.
#[pyfunction]
fn s_naive(field: &PyField, d: u64, a: u32) -> PyResult<i64> {
    expsums::s_naive(&field.ctx, d, field.elem(a)?).map_err(err)
}

/// Per-a rows {a_hex, S, S0, S1, S2, Ta, class} and the failures found.
#[pyfunction]
fn decomposition_check(py: Python<'_>, field: &PyField, d: u64, l: u32) -> PyResult<Py<PyAny>> {
    to_py(py, &expsums::decomposition_check(&field.ctx, d, l).map_err(err)?)
}

/// R(v).
#[pyfunction]
fn r_eval(field: &PyField, l: u32, v: u32) -> PyResult<u32> {
    let lp = make_lparams(field.ctx.k(), l).map_err(err)?;
    Ok(dobbertin::r_eval(&field.ctx, &lp, field.elem(v)?).map_err(err)?.0)
}

/// Number of zeros N_a of A_a in GF(2^k).
#[pyfunction]
#[pyo3(signature = (field, l, a, method = "kernel"))]
fn zeros_a(field: &PyField, l: u32, a: u32, method: &str) -> PyResult<Vec<u32>> {
    let lp = make_lparams(field.ctx.k(), l).map_err(err)?;
    let rep = zerocount::affine_zeros_a(&field.ctx, &lp, field.elem(a)?, self::method(method)?).map_err(err)?;
    Ok(rep.zeros.unwrap_or_default().into_iter().map(|z| z.0).collect())
}

/// T_a, the number of zeros of L_a in GF(2^m).
#[pyfunction]
#[pyo3(signature = (field, l, a, method = "kernel"))]
fn t_a(field: &PyField, l: u32, a: u32, method: &str) -> PyResult<u64> {
    let lp = make_lparams(field.ctx.k(), l).map_err(err)?;
    Ok(zerocount::linearized_kernel_l(&field.ctx, &lp, field.elem(a)?, self::method(method)?).map_err(err)?.count)
}

/// (|M_1|, |M_2|, |M_4|) for the given l.
#[pyfunction]
fn m_distribution(field: &PyField, l: u32) -> PyResult<(u64, u64, u64)> {
    let lp = make_lparams(field.ctx.k(), l).map_err(err)?;
    let d = zerocount::m_distribution(&field.ctx, &lp).map_err(err)?;
    Ok((d.m1, d.m2, d.m4))
}

/// Coset minima of the decimations covered by the three-valued theorem.
#[pyfunction]
fn valid_decimations(k: u32) -> PyResult<Vec<u64>> {
    Ok(verify::valid_decimations(k).map_err(err)?.into_iter().map(|c| c.rep).collect())
}

#[pyfunction]
#[pyo3(signature = (field, long_run = false))]
fn search_three_valued(py: Python<'_>, field: &PyField, long_run: bool) -> PyResult<Py<PyAny>> {
    let rep = py.detach(|| verify::search_three_valued(&field.ctx, long_run)).map_err(err)?;
    to_py(py, &rep)
}

/// (r, s, t, v) of the four-valued linear system.
#[pyfunction]
fn solve_distribution(k: u32, s_plus_t: u64) -> PyResult<(u64, u64, u64, u64)> {
    verify::solve_distribution(k, s_plus_t).map_err(err)
}

/// Run comma-separated suites (or "all"); one report dict per suite.
#[pyfunction]
fn verify_suites(py: Python<'_>, field: &PyField, suites: &str) -> PyResult<Py<PyAny>> {
    let which = parse_suites(suites).map_err(err)?;
    let reports = py.detach(|| run_suite(&field.ctx, &which)).map_err(err)?;
    to_py(py, &reports)
}

#[pymodule]
#[pyo3(name = "mseqlab")]
fn mseqlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyField>()?;
    m.add_function(wrap_pyfunction!(crosscorr_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(crosscorr_all, m)?)?;
    m.add_function(wrap_pyfunction!(moment_check, m)?)?;
    m.add_function(wrap_pyfunction!(s_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(s_naive, m)?)?;
    m.add_function(wrap_pyfunction!(decomposition_check, m)?)?;
    m.add_function(wrap_pyfunction!(r_eval, m)?)?;
    m.add_function(wrap_pyfunction!(zeros_a, m)?)?;
    m.add_function(wrap_pyfunction!(t_a, m)?)?;
    m.add_function(wrap_pyfunction!(m_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(valid_decimations, m)?)?;
    m.add_function(wrap_pyfunction!(search_three_valued, m)?)?;
    m.add_function(wrap_pyfunction!(solve_distribution, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suites, m)?)?;
    Ok(())
}
