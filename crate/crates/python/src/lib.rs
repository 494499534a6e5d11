//! Python bindings: Laurent polynomials in q, rook and hit numbers, chromatic
//! quasisymmetric polynomials and the verification sweeps.

use pyo3::exceptions::{PyArithmeticError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

use qchroma_core::chromatic::{
    an_expansion, csf_bruteforce, csf_recursive, gp_expansion, graph_from_shape,
};
use qchroma_core::harness::{emit, run_suites, Bounds, Format, RunOptions};
use qchroma_core::hits::{hit_numbers_basis, hit_numbers_stat};
use qchroma_core::qarith::{exact_div, q_number as core_q_number, QLaurent};
use qchroma_core::rooks::rook_number as core_rook_number;
use qchroma_core::shapes::{parse_board, parse_shape, BoardShape};
use qchroma_core::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::DivisionByZero => PyZeroDivisionError::new_err(e.to_string()),
        Error::NonExactDivision { .. } | Error::RouteMismatch { .. } => {
            PyArithmeticError::new_err(e.to_string())
        }
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Laurent polynomial in q with integer coefficients.
#[pyclass(name = "QLaurent", module = "qchroma", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyQLaurent {
    inner: QLaurent,
}

impl From<QLaurent> for PyQLaurent {
    fn from(inner: QLaurent) -> Self {
        PyQLaurent { inner }
    }
}

#[pymethods]
impl PyQLaurent {
    /// Parses the compact text form, e.g. `"2q+2q^2"` or `"-q^-1"`.
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse::<QLaurent>().map(Into::into).map_err(to_py)
    }

    #[getter]
    fn min_exp(&self) -> i64 {
        self.inner.min_exp()
    }

    /// Coefficients from `q^min_exp` upwards.
    #[getter]
    fn coeffs(&self) -> Vec<String> {
        self.inner
            .coeffs()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    fn coeff(&self, exp: i64) -> String {
        self.inner.coeff(exp).to_string()
    }

    fn eval_at_one(&self) -> String {
        self.inner.eval_at_one().to_string()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn factored(&self) -> String {
        self.inner.factored_text()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    fn __add__(&self, other: &PyQLaurent) -> PyQLaurent {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &PyQLaurent) -> PyQLaurent {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: &PyQLaurent) -> PyQLaurent {
        (&self.inner * &other.inner).into()
    }

    fn __neg__(&self) -> PyQLaurent {
        (-&self.inner).into()
    }

    /// Exact division; raises `ArithmeticError` when the quotient is not a
    /// Laurent polynomial.
    fn __truediv__(&self, other: &PyQLaurent) -> PyResult<PyQLaurent> {
        exact_div(&self.inner, &other.inner)
            .map(Into::into)
            .map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QLaurent('{}')", self.inner)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.to_string().hash(&mut h);
        h.finish()
    }
}

fn shape(parts: &str, board: &str) -> PyResult<BoardShape> {
    parse_shape(parts, board).map_err(to_py)
}

/// `[a] = (1 - q^a) / (1 - q)`.
#[pyfunction]
fn q_number(a: i64) -> PyQLaurent {
    core_q_number(a).into()
}

/// q-rook number `R_k` of a shape such as `"2,1"` on a board such as `"2x3"`.
#[pyfunction]
fn rook_number(shape_text: &str, board: &str, k: usize) -> PyResult<PyQLaurent> {
    Ok(core_rook_number(&shape(shape_text, board)?, k).into())
}

/// Hit numbers `H_0..H_n`. `route` is `"basis"`, `"stat"` or `"both"`; with
/// `"both"` a disagreement raises `ArithmeticError`.
#[pyfunction]
#[pyo3(signature = (shape_text, board, route = "basis"))]
fn hit_numbers(shape_text: &str, board: &str, route: &str) -> PyResult<Vec<PyQLaurent>> {
    let s = shape(shape_text, board)?;
    let entries = match route {
        "basis" => hit_numbers_basis(&s).map_err(to_py)?.entries,
        "stat" => {
            if s.rows() > s.cols() {
                return Err(PyValueError::new_err("hit numbers need rows <= cols"));
            }
            hit_numbers_stat(&s).entries
        }
        "both" => {
            let basis = hit_numbers_basis(&s).map_err(to_py)?.entries;
            if basis != hit_numbers_stat(&s).entries {
                return Err(PyArithmeticError::new_err("basis and stat routes disagree"));
            }
            basis
        }
        other => return Err(PyValueError::new_err(format!("unknown route `{other}`"))),
    };
    Ok(entries.into_iter().map(Into::into).collect())
}

/// Chromatic quasisymmetric polynomial in `colors` variables as a list of
/// `(exponents, coefficient)` pairs, exponents weakly decreasing.
#[pyfunction]
#[pyo3(signature = (shape_text, board, colors, route = "recursive"))]
fn csf(
    shape_text: &str,
    board: &str,
    colors: usize,
    route: &str,
) -> PyResult<Vec<(Vec<u32>, PyQLaurent)>> {
    let s = shape(shape_text, board)?;
    let poly = match route {
        "brute" => csf_bruteforce(&graph_from_shape(&s), colors),
        "recursive" => csf_recursive(&s, colors),
        "gp" => gp_expansion(&s, colors).map_err(to_py)?,
        "an" => an_expansion(&s, colors).map_err(to_py)?,
        other => return Err(PyValueError::new_err(format!("unknown route `{other}`"))),
    };
    Ok(poly
        .terms()
        .iter()
        .map(|(k, c)| (k.clone(), c.clone().into()))
        .collect())
}

/// Runs a verification suite (or `"all"`) and returns `(passed, json_report)`.
#[pyfunction]
#[pyo3(signature = (suite, max_m = 5, max_n = None, max_cells = None, max_vertices = 6, colors = None, board = None, jobs = 1))]
#[allow(clippy::too_many_arguments)]
fn run_suite(
    py: Python<'_>,
    suite: &str,
    max_m: usize,
    max_n: Option<usize>,
    max_cells: Option<usize>,
    max_vertices: usize,
    colors: Option<usize>,
    board: Option<&str>,
    jobs: usize,
) -> PyResult<(bool, String)> {
    let bounds = Bounds {
        max_m,
        max_n,
        max_cells,
        max_vertices,
        colors,
        board: board.map(parse_board).transpose().map_err(to_py)?,
    };
    let opts = RunOptions {
        jobs,
        ..RunOptions::default()
    };
    let reports = py
        .detach(|| run_suites(suite, &bounds, &opts))
        .map_err(to_py)?;
    let mut out = Vec::new();
    emit(&reports, Format::Json, &mut out).expect("in-memory write");
    let passed = reports.iter().all(|r| r.passed());
    Ok((passed, String::from_utf8(out).expect("utf-8 json")))
}

#[pymodule]
pub fn qchroma(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQLaurent>()?;
    m.add_function(wrap_pyfunction!(q_number, m)?)?;
    m.add_function(wrap_pyfunction!(rook_number, m)?)?;
    m.add_function(wrap_pyfunction!(hit_numbers, m)?)?;
    m.add_function(wrap_pyfunction!(csf, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}
