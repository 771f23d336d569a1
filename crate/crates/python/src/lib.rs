//! Python bindings. Graphs cross the boundary as `Graph` objects or graph6
//! strings; polynomials as ascending coefficient lists of Python ints.

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use spectral_turan::charpoly::{self as poly, Polynomial};
use spectral_turan::constructions;
use spectral_turan::search::{self, ReportFormat, SearchOptions, VerifyParams};
use spectral_turan::spectra::{self, PSpectralOptions, SpectralResult, DEFAULT_TOLERANCE};
use spectral_turan::symmetrize as sym;
use spectral_turan::{Error, PartSizes};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Convergence { .. } | Error::Budget { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parts(sizes: Vec<usize>) -> PyResult<PartSizes> {
    PartSizes::new(sizes).map_err(to_py)
}

/// (kind, vertices, λ before, λ after).
type Step = (String, Vec<usize>, f64, f64);

fn pair(res: SpectralResult) -> (f64, Vec<f64>) {
    (res.value, res.vector)
}

#[pyclass(name = "Graph", module = "pyturan", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: spectral_turan::Graph,
}

impl From<spectral_turan::Graph> for PyGraph {
    fn from(inner: spectral_turan::Graph) -> Self {
        PyGraph { inner }
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        spectral_turan::Graph::build(n, &edges).map(Into::into).map_err(to_py)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        spectral_turan::Graph::from_graph6(text).map(Into::into).map_err(to_py)
    }

    fn graph6(&self) -> String {
        self.inner.to_graph6()
    }

    /// graph6 of the canonical relabelling; equal exactly for isomorphic graphs.
    fn canonical_graph6(&self) -> PyResult<String> {
        Ok(self.inner.canonical_form().map_err(to_py)?.to_graph6())
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn clique_number(&self) -> usize {
        self.inner.clique_number()
    }

    fn chromatic_number(&self) -> usize {
        self.inner.chromatic_number()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Part sizes if the graph is complete multipartite, else None.
    fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        self.inner.complete_multipartite_parts()
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!("Graph.from_graph6({:?})", self.inner.to_graph6())
    }
}

#[pyfunction]
fn turan_graph(n: usize, r: usize) -> PyResult<PyGraph> {
    constructions::turan_graph(n, r).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn complete_multipartite(sizes: Vec<usize>) -> PyResult<PyGraph> {
    Ok(constructions::complete_multipartite(&parts(sizes)?).into())
}

#[pyfunction]
fn sk_graph(a: usize, b: usize) -> PyResult<PyGraph> {
    constructions::sk_graph(a, b).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn y_graph(n: usize, r: usize) -> PyResult<PyGraph> {
    constructions::y_graph(n, r).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn lemma42_graph(sizes: Vec<usize>) -> PyResult<PyGraph> {
    constructions::lemma42_graph(&parts(sizes)?)
        .map(Into::into)
        .map_err(to_py)
}

#[pyfunction]
fn erdos_family_graph(n: usize, x1: usize) -> PyResult<PyGraph> {
    constructions::erdos_family_graph(n, x1).map(Into::into).map_err(to_py)
}

#[pyfunction]
fn split_graph(n: usize, k: usize) -> PyResult<PyGraph> {
    constructions::split_graph(n, k).map(Into::into).map_err(to_py)
}

/// Returns (value, unit Perron vector).
#[pyfunction]
#[pyo3(signature = (g, tol = DEFAULT_TOLERANCE))]
fn adjacency_radius(g: &PyGraph, tol: f64) -> PyResult<(f64, Vec<f64>)> {
    spectra::adjacency_radius(&g.inner, tol).map(pair).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, tol = DEFAULT_TOLERANCE))]
fn signless_laplacian_radius(g: &PyGraph, tol: f64) -> PyResult<(f64, Vec<f64>)> {
    spectra::signless_laplacian_radius(&g.inner, tol)
        .map(pair)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, alpha, tol = DEFAULT_TOLERANCE))]
fn a_alpha_radius(g: &PyGraph, alpha: f64, tol: f64) -> PyResult<(f64, Vec<f64>)> {
    spectra::a_alpha_radius(&g.inner, alpha, tol).map(pair).map_err(to_py)
}

/// Returns (value, vector of unit p-norm).
#[pyfunction]
#[pyo3(signature = (g, p, restarts = 8, seed = 0, tol = DEFAULT_TOLERANCE))]
fn p_spectral_radius(g: &PyGraph, p: f64, restarts: usize, seed: u64, tol: f64) -> PyResult<(f64, Vec<f64>)> {
    let opts = PSpectralOptions::new(p)
        .with_restarts(restarts)
        .with_seed(seed)
        .with_tolerance(tol);
    spectra::p_spectral_radius(&g.inner, &opts).map(pair).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (g, signless = false))]
fn charpoly(g: &PyGraph, signless: bool) -> PyResult<Vec<BigInt>> {
    let poly = if signless {
        poly::charpoly_signless_exact(&g.inner)
    } else {
        poly::charpoly_exact(&g.inner)
    };
    Ok(poly.map_err(to_py)?.coeffs().to_vec())
}

#[pyfunction]
fn f_parts(sizes: Vec<usize>) -> PyResult<Vec<BigInt>> {
    Ok(poly::f_parts(&parts(sizes)?).coeffs().to_vec())
}

#[pyfunction]
#[pyo3(signature = (coeffs, tol = 1e-12))]
fn largest_root(coeffs: Vec<BigInt>, tol: f64) -> PyResult<f64> {
    poly::largest_root(&Polynomial::new(coeffs), tol).map_err(to_py)
}

/// Returns (all identities hold, JSON table).
#[pyfunction]
#[pyo3(signature = (max = 7))]
fn check_identities(max: usize) -> (bool, String) {
    let table = poly::check_identities(max);
    (
        table.all_hold(),
        serde_json::to_string(&table).expect("table serializes"),
    )
}

/// Returns (steps, final graph); each step is (kind, vertices, λ before, λ after).
#[pyfunction]
#[pyo3(signature = (g, max_steps = None, majorize = false))]
fn symmetrize(g: &PyGraph, max_steps: Option<usize>, majorize: bool) -> PyResult<(Vec<Step>, PyGraph)> {
    let trace = if majorize {
        sym::erdos_majorization_pipeline(&g.inner)
    } else {
        sym::symmetrize_to_multipartite(&g.inner, max_steps)
    }
    .map_err(to_py)?;
    let steps = trace
        .steps
        .into_iter()
        .map(|s| {
            let kind = serde_json::to_value(s.kind).expect("kind serializes");
            (
                kind.as_str().unwrap_or_default().to_string(),
                s.vertices,
                s.lambda_before,
                s.lambda_after,
            )
        })
        .collect();
    Ok((steps, trace.final_graph.into()))
}

#[pyfunction]
fn theorem_ids() -> Vec<&'static str> {
    search::theorem_ids()
}

/// Runs a catalogued check and returns (pass, JSON report).
#[pyfunction]
#[pyo3(signature = (theorem, n = None, r = None, p = None, alpha = None, jobs = 0, seed = 0))]
#[allow(clippy::too_many_arguments)]
fn verify(
    py: Python<'_>,
    theorem: &str,
    n: Option<Vec<usize>>,
    r: Option<Vec<usize>>,
    p: Option<Vec<f64>>,
    alpha: Option<Vec<f64>>,
    jobs: usize,
    seed: u64,
) -> PyResult<(bool, String)> {
    let params = VerifyParams {
        n,
        r,
        p,
        alpha,
        search: SearchOptions {
            jobs,
            seed,
            ..SearchOptions::default()
        },
    };
    let report = py.detach(|| search::verify_theorem(theorem, &params)).map_err(to_py)?;
    Ok((report.pass, search::emit_report(&report, ReportFormat::Json)))
}

#[pymodule]
fn pyturan(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(turan_graph, m)?)?;
    m.add_function(wrap_pyfunction!(complete_multipartite, m)?)?;
    m.add_function(wrap_pyfunction!(sk_graph, m)?)?;
    m.add_function(wrap_pyfunction!(y_graph, m)?)?;
    m.add_function(wrap_pyfunction!(lemma42_graph, m)?)?;
    m.add_function(wrap_pyfunction!(erdos_family_graph, m)?)?;
    m.add_function(wrap_pyfunction!(split_graph, m)?)?;
    m.add_function(wrap_pyfunction!(adjacency_radius, m)?)?;
    m.add_function(wrap_pyfunction!(signless_laplacian_radius, m)?)?;
    m.add_function(wrap_pyfunction!(a_alpha_radius, m)?)?;
    m.add_function(wrap_pyfunction!(p_spectral_radius, m)?)?;
    m.add_function(wrap_pyfunction!(charpoly, m)?)?;
    m.add_function(wrap_pyfunction!(f_parts, m)?)?;
    m.add_function(wrap_pyfunction!(largest_root, m)?)?;
    m.add_function(wrap_pyfunction!(check_identities, m)?)?;
    m.add_function(wrap_pyfunction!(symmetrize, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
