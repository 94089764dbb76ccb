//! Python bindings. Indices are 1-based and Weyl group elements are passed
//! as words (`"s1 s2"`, `"id"`, `"w0"`), matching the command line.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use twisted_weyl::affine::{beta_sequence, format_root_expr, BetaSequence};
use twisted_weyl::fixtures::{self, Status};
use twisted_weyl::oschar::{self, TinfMethod};
use twisted_weyl::{AffineType, Error, Weight};

fn err(e: Error) -> PyErr {
    match e {
        Error::Internal(m) => PyRuntimeError::new_err(m),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// Exact character: a finite sum of `coeff * q^k * x^weight`.
#[pyclass(frozen, eq, skip_from_py_object, name = "CharPoly")]
#[derive(Clone, PartialEq)]
pub struct PyCharPoly {
    inner: twisted_weyl::CharPoly,
}

#[pymethods]
impl PyCharPoly {
    /// `[(weight, q, coeff)]` in sorted order.
    fn terms(&self) -> Vec<(Vec<i64>, i64, i64)> {
        self.inner.terms().map(|(w, q, c)| (w.0.clone(), q, c)).collect()
    }

    /// Value at `x = 1, q = 1`.
    fn eval_one(&self) -> i64 {
        self.inner.eval_one()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CharPoly({})", self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }
}

fn betas_out(seq: &BetaSequence) -> Vec<(Vec<i64>, i64, i64)> {
    seq.entries.iter().map(|e| (e.root.re.0.clone(), e.root.deg, e.degree())).collect()
}

/// Root system, Weyl group and graph of one twisted type.
#[pyclass(frozen, name = "Model")]
pub struct PyModel {
    inner: Arc<twisted_weyl::Model>,
}

impl PyModel {
    fn sigma(&self, word: &str) -> PyResult<usize> {
        self.inner.group.parse(&self.inner.rs, word).map_err(err)
    }

    fn index(&self, i: usize) -> PyResult<usize> {
        if i == 0 || i > self.inner.rs.rank() {
            return Err(PyValueError::new_err(format!("index {i} out of range 1..={}", self.inner.rs.rank())));
        }
        Ok(i - 1)
    }

    fn word(&self, w: usize) -> String {
        self.inner.group.element(w).to_string()
    }
}

#[pymethods]
impl PyModel {
    #[new]
    fn new(type_tag: &str) -> PyResult<Self> {
        let tag: AffineType = type_tag.parse().map_err(err)?;
        Ok(Self { inner: twisted_weyl::Model::get(tag).map_err(err)? })
    }

    #[getter]
    fn tag(&self) -> String {
        self.inner.tag().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rs.rank()
    }

    /// Order of the finite Weyl group.
    #[getter]
    fn order(&self) -> usize {
        self.inner.group.order()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.rs.positive_roots().iter().map(|r| r.0.clone()).collect()
    }

    /// Reduced word of the given element.
    fn canonical(&self, word: &str) -> PyResult<String> {
        Ok(self.word(self.sigma(word)?))
    }

    /// Fundamental sequence as `[(re, deg, shifted_deg)]`.
    fn betas(&self, i: usize) -> PyResult<Vec<(Vec<i64>, i64, i64)>> {
        let seq = beta_sequence(&self.inner.rs, self.index(i)?).map_err(err)?;
        Ok(betas_out(&seq))
    }

    /// Shifted sequence of `t_lambda`.
    fn translation_betas(&self, lam: Vec<i64>) -> PyResult<Vec<(Vec<i64>, i64, i64)>> {
        let seq = oschar::translation_sequence(&self.inner, &Weight(lam)).map_err(err)?;
        Ok(betas_out(&seq))
    }

    /// `[(from, to, label, kind)]`.
    #[pyo3(signature = (reversed = false))]
    fn tqbg_edges(&self, reversed: bool) -> Vec<(String, String, String, String)> {
        let m = &self.inner;
        let graph = if reversed { m.graph.reverse() } else { m.graph.clone() };
        graph
            .edges(&m.group)
            .into_iter()
            .map(|e| {
                let label = format_root_expr(&m.rs.positive_roots()[e.label].0, 0);
                (self.word(e.from), self.word(e.to), label, format!("{:?}", e.kind).to_lowercase())
            })
            .collect()
    }

    fn tqbg_dot(&self) -> String {
        self.inner.graph.to_dot(&self.inner.rs, &self.inner.group)
    }

    /// Character of `W_{sigma(lambda)}`.
    #[pyo3(signature = (lam, sigma = "id"))]
    fn char(&self, py: Python<'_>, lam: Vec<i64>, sigma: &str) -> PyResult<PyCharPoly> {
        let s = self.sigma(sigma)?;
        let m = Arc::clone(&self.inner);
        let inner = py.detach(move || oschar::c_poly(&m, s, &Weight(lam))).map_err(err)?;
        Ok(PyCharPoly { inner })
    }

    #[pyo3(signature = (lam, sigma = "id"))]
    fn dim(&self, py: Python<'_>, lam: Vec<i64>, sigma: &str) -> PyResult<i64> {
        let s = self.sigma(sigma)?;
        let m = Arc::clone(&self.inner);
        py.detach(move || oschar::dim_weyl(&m, s, &Weight(lam))).map_err(err)
    }

    /// `E_lambda` at `t = 0` (`spec="0"`) or `t = infinity` (`spec="inf"`).
    #[pyo3(signature = (lam, spec = "0", method = "reversed"))]
    fn macdonald(&self, py: Python<'_>, lam: Vec<i64>, spec: &str, method: &str) -> PyResult<PyCharPoly> {
        let how = match method {
            "reversed" => TinfMethod::ReversedGraph,
            "w0" => TinfMethod::W0Twist,
            other => return Err(PyValueError::new_err(format!("unknown method {other:?}"))),
        };
        let m = Arc::clone(&self.inner);
        let lam = Weight(lam);
        let inner = match spec {
            "0" => py.detach(move || oschar::macdonald_t0(&m, &lam)),
            "inf" => py.detach(move || oschar::macdonald_tinf(&m, &lam, how)),
            other => return Err(PyValueError::new_err(format!("spec must be '0' or 'inf', got {other:?}"))),
        }
        .map_err(err)?;
        Ok(PyCharPoly { inner })
    }

    /// Pieces `(kappa, x_shift, q_shift)` of `W_{sigma(lambda - omega_i)}`.
    #[pyo3(signature = (lam, i, sigma = "id"))]
    fn decompose(&self, lam: Vec<i64>, i: usize, sigma: &str) -> PyResult<Vec<(String, Vec<i64>, i64)>> {
        let s = self.sigma(sigma)?;
        let pieces = oschar::decompose(&self.inner, s, &Weight(lam), self.index(i)?).map_err(err)?;
        Ok(pieces.into_iter().map(|p| (self.word(p.kappa), p.x_shift.0, p.q_shift)).collect())
    }

    fn __repr__(&self) -> String {
        format!("Model({:?})", self.inner.tag().to_string())
    }
}

/// Replays the published reference data: `[(name, status, detail)]`.
#[pyfunction]
fn selftest() -> PyResult<Vec<(String, String, String)>> {
    let checks = fixtures::selftest().map_err(err)?;
    Ok(checks
        .into_iter()
        .map(|c| {
            let status = match c.status {
                Status::Pass => "pass",
                Status::KnownMismatch => "known",
                Status::Fail => "fail",
            };
            (c.name, status.to_string(), c.detail)
        })
        .collect())
}

#[pymodule]
fn twisted_weyl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyModel>()?;
    m.add_class::<PyCharPoly>()?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
