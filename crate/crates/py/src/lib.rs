//! Python bindings. Vertices are ints, edges are `(u, v)` tuples and colors
//! are the strings `"B"` and `"W"`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use even_tree::oracle::{self, OracleError, DEFAULT_CAP};
use even_tree::recognize::GraphClass;
use even_tree::reduction::{self as red, ReductionError};
use even_tree::solve::{self as solver, AutoConfig, SolveError, SolveOutcome};
use even_tree::{text, Color, Edge};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn colors(cs: &[Color]) -> Vec<String> {
    cs.iter().map(|c| c.symbol().to_string()).collect()
}

fn solve_err(e: SolveError) -> PyErr {
    match e {
        SolveError::Integrity(_) => PyRuntimeError::new_err(e.to_string()),
        SolveError::Oracle(OracleError::CapExceeded { .. }) => PyRuntimeError::new_err(e.to_string()),
        _ => value_error(e),
    }
}

/// A simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "even_tree", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: even_tree::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<Edge>) -> PyResult<Self> {
        even_tree::Graph::new(n, edges).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    /// Parses the `n m` header plus edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text::parse_graph(text).map(|inner| PyGraph { inner }).map_err(value_error)
    }

    fn to_text(&self) -> String {
        text::format_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<Edge> {
        self.inner.edges().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.n(), self.inner.edges())
    }
}

/// A spanning even tree with its admissible coloring.
#[pyclass(name = "EvenTree", module = "even_tree", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyEvenTree {
    edges: Vec<Edge>,
    coloring: Vec<String>,
}

impl From<even_tree::EvenTree> for PyEvenTree {
    fn from(t: even_tree::EvenTree) -> Self {
        PyEvenTree { coloring: colors(&t.coloring), edges: t.edges }
    }
}

#[pymethods]
impl PyEvenTree {
    fn __repr__(&self) -> String {
        format!("EvenTree(edges={:?}, coloring={:?})", self.edges, self.coloring.concat())
    }
}

/// Result of `solve`: `status` is `"found"`, `"no-tree"` or
/// `"not-in-class"`.
#[pyclass(name = "Solution", module = "even_tree", frozen, get_all)]
struct PySolution {
    status: String,
    strategy: String,
    tree: Option<PyEvenTree>,
    certificate: Option<String>,
}

#[pymethods]
impl PySolution {
    fn __repr__(&self) -> String {
        format!("Solution(status={:?}, strategy={:?})", self.status, self.strategy)
    }
}

/// Returns `(valid, message, coloring)`; `coloring` is `None` unless valid.
#[pyfunction]
fn verify(graph: &PyGraph, tree: Vec<Edge>) -> (bool, String, Option<Vec<String>>) {
    let report = even_tree::verify_even_spanning_tree(&graph.inner, &tree);
    (report.is_valid(), report.to_string(), report.coloring().map(colors))
}

#[pyfunction]
fn recognize(graph: &PyGraph) -> Vec<String> {
    even_tree::recognize::recognize(&graph.inner).into_iter().map(|c| c.label().to_string()).collect()
}

/// Solves with one class solver, or dispatches when `cls` is `"auto"`.
#[pyfunction]
#[pyo3(signature = (graph, cls = "auto", oracle_max_vertices = 20))]
fn solve(graph: &PyGraph, cls: &str, oracle_max_vertices: usize) -> PyResult<PySolution> {
    let g = &graph.inner;
    let (outcome, strategy) = if cls == "auto" {
        let config = AutoConfig { oracle_max_vertices, ..AutoConfig::default() };
        let (o, s) = solver::solve_auto(g, &config).map_err(solve_err)?;
        (o, s.to_string())
    } else {
        let class: GraphClass = cls.parse().map_err(value_error)?;
        (solver::solve_class(g, class).map_err(solve_err)?, class.to_string())
    };
    Ok(match outcome {
        SolveOutcome::Found(t) => {
            PySolution { status: "found".into(), strategy, tree: Some(t.into()), certificate: None }
        }
        SolveOutcome::NoTree(cert) => {
            PySolution { status: "no-tree".into(), strategy, tree: None, certificate: Some(cert.to_string()) }
        }
        SolveOutcome::NotInClass => {
            PySolution { status: "not-in-class".into(), strategy, tree: None, certificate: None }
        }
    })
}

/// Exhaustive search; raises `RuntimeError` when the cap is exceeded.
#[pyfunction]
#[pyo3(name = "oracle", signature = (graph, cap = DEFAULT_CAP))]
fn oracle_search(graph: &PyGraph, cap: u64) -> PyResult<Option<PyEvenTree>> {
    match oracle::oracle_even_spanning_tree(&graph.inner, cap) {
        Ok(t) => Ok(t.map(Into::into)),
        Err(e @ OracleError::CapExceeded { .. }) => Err(PyRuntimeError::new_err(e.to_string())),
        Err(e) => Err(value_error(e)),
    }
}

#[pyfunction]
#[pyo3(signature = (graph, cap = DEFAULT_CAP))]
fn count_spanning_trees(graph: &PyGraph, cap: u64) -> PyResult<u64> {
    oracle::count_spanning_trees(&graph.inner, cap).map_err(|e| PyRuntimeError::new_err(e.to_string()))
}

/// The reduction graph of a CNF formula with its vertex map.
#[pyclass(name = "Reduction", module = "even_tree", frozen)]
struct PyReduction {
    inner: red::Reduction,
}

fn reduction_err(e: ReductionError) -> PyErr {
    match e {
        ReductionError::Integrity(_) => PyRuntimeError::new_err(e.to_string()),
        _ => value_error(e),
    }
}

#[pymethods]
impl PyReduction {
    /// From DIMACS text.
    #[staticmethod]
    fn from_dimacs(text: &str) -> PyResult<Self> {
        let cnf = red::parse_dimacs(text).map_err(value_error)?;
        Ok(PyReduction { inner: red::build_reduction(&cnf) })
    }

    /// From signed 1-based literals, one list per clause.
    #[staticmethod]
    fn from_clauses(num_vars: usize, clauses: Vec<Vec<i32>>) -> PyResult<Self> {
        let cnf = red::Cnf::new(num_vars, clauses).map_err(value_error)?;
        Ok(PyReduction { inner: red::build_reduction(&cnf) })
    }

    /// Parses a map file written by `map_text`.
    #[staticmethod]
    fn from_map(text: &str) -> PyResult<Self> {
        red::parse_map(text).map(|inner| PyReduction { inner }).map_err(value_error)
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph { inner: self.inner.graph.clone() }
    }

    #[getter]
    fn roles(&self) -> Vec<String> {
        self.inner.map.roles.iter().map(|r| r.to_string()).collect()
    }

    fn map_text(&self) -> String {
        red::format_map(&self.inner)
    }

    fn is_satisfiable(&self) -> bool {
        self.inner.map.cnf.brute_force().is_some()
    }

    /// The tree for a satisfying assignment, `None` if it does not satisfy.
    fn tree_from_assignment(&self, assignment: Vec<bool>) -> PyResult<Option<PyEvenTree>> {
        Ok(self.inner.tree_from_assignment(&assignment).map_err(reduction_err)?.map(Into::into))
    }

    fn extract_assignment(&self, tree: Vec<Edge>) -> PyResult<Vec<bool>> {
        self.inner.extract_assignment(&tree).map_err(reduction_err)
    }
}

/// Returns `(passed, report)`.
#[pyfunction]
#[pyo3(signature = (max_n = 6, seed = 0))]
fn selfcheck(max_n: usize, seed: u64) -> (bool, String) {
    let report = even_tree::selfcheck::run(max_n, seed);
    (report.passed(), report.to_string())
}

#[pymodule]
#[pyo3(name = "even_tree")]
fn even_tree_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyEvenTree>()?;
    m.add_class::<PySolution>()?;
    m.add_class::<PyReduction>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_search, m)?)?;
    m.add_function(wrap_pyfunction!(count_spanning_trees, m)?)?;
    m.add_function(wrap_pyfunction!(selfcheck, m)?)?;
    Ok(())
}
