//! Python bindings. Configurations and move sequences cross the boundary in
//! their text forms (`"0-1,1-2"`, `"-"` for empty).

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use edgeflip::io::{self, format_edge_set, format_move_sequence, parse_edge_set, parse_move_sequence};
use edgeflip::{corpus, flip, graph, orbit, solver, structure, vertex_flip};

fn py_err(e: edgeflip::Error) -> PyErr {
    let msg = format!("{}: {e}", e.kind());
    match e {
        edgeflip::Error::CapExceeded { .. } => PyRuntimeError::new_err(msg),
        _ => PyValueError::new_err(msg),
    }
}

/// A finite simple connected graph with canonically ordered edges.
#[pyclass(name = "Graph", module = "pyedgeflip", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: edgeflip::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: edgeflip::Graph::new(n, &edges).map_err(py_err)?,
        })
    }

    /// Parses the JSON or text graph format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: io::parse_graph(text).map_err(py_err)?,
        })
    }

    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        corpus::builtin(name)
            .map(|inner| PyGraph { inner })
            .ok_or_else(|| PyValueError::new_err(format!("no built-in graph named {name:?}")))
    }

    /// Member of the one-hub family: path on `1..m` plus hub `0` joined to `attachments`.
    #[staticmethod]
    fn one_hub(m: usize, attachments: Vec<usize>) -> PyResult<Self> {
        let spec = vertex_flip::YGraphSpec::new(m, attachments).map_err(py_err)?;
        Ok(PyGraph {
            inner: vertex_flip::build_y(&spec),
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn line_graph(&self) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::line_graph(&self.inner).map_err(py_err)?,
        })
    }

    fn to_json(&self) -> String {
        io::graph_to_json(&self.inner).to_string()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.n(), self.inner.edges())
    }
}

fn puzzle(g: &PyGraph) -> PyResult<orbit::Puzzle> {
    orbit::Puzzle::new(g.inner.clone()).map_err(py_err)
}

fn descriptor_dict<'py>(py: Python<'py>, g: &edgeflip::Graph, d: &edgeflip::OrbitDescriptor) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("coset_rep", format_edge_set(g, &d.coset_rep))?;
    out.set_item("class", d.class.label())?;
    Ok(out)
}

/// Applies one move (an edge `(u, v)`) to a configuration.
#[pyfunction]
fn apply_move(g: &PyGraph, config: &str, edge: (usize, usize)) -> PyResult<String> {
    let cfg = parse_edge_set(&g.inner, config).map_err(py_err)?;
    let e = g
        .inner
        .edge_index(edge.0, edge.1)
        .ok_or_else(|| py_err(edgeflip::Error::NoSuchEdge(edge.0, edge.1)))?;
    let out = flip::apply_move(&g.inner, &cfg, edgeflip::Move(e)).map_err(py_err)?;
    Ok(format_edge_set(&g.inner, &out))
}

/// Replays a move sequence from `config`.
#[pyfunction]
fn apply_moves(g: &PyGraph, config: &str, moves: &str) -> PyResult<String> {
    let cfg = parse_edge_set(&g.inner, config).map_err(py_err)?;
    let word = parse_move_sequence(&g.inner, moves).map_err(py_err)?;
    let out = solver::verify_sequence(&g.inner, &cfg, &word).map_err(py_err)?;
    Ok(format_edge_set(&g.inner, &out))
}

/// Orbit descriptor and orbit size of a configuration.
#[pyfunction]
fn classify<'py>(py: Python<'py>, g: &PyGraph, config: &str) -> PyResult<Bound<'py, PyDict>> {
    let p = puzzle(g)?;
    let cfg = parse_edge_set(&g.inner, config).map_err(py_err)?;
    let d = p.classify(&cfg).map_err(py_err)?;
    let out = descriptor_dict(py, &g.inner, &d)?;
    out.set_item("orbit_size", p.orbit_size(&d).map_err(py_err)?)?;
    Ok(out)
}

#[pyfunction]
fn same_orbit(g: &PyGraph, a: &str, b: &str) -> PyResult<bool> {
    let p = puzzle(g)?;
    let a = parse_edge_set(&g.inner, a).map_err(py_err)?;
    let b = parse_edge_set(&g.inner, b).map_err(py_err)?;
    p.same_orbit(&a, &b).map_err(py_err)
}

#[pyfunction]
fn orbit_count(g: &PyGraph) -> PyResult<num_bigint::BigUint> {
    puzzle(g)?.orbit_count().map_err(py_err)
}

/// Shortest move sequence, or `None` when the target is in another orbit.
#[pyfunction]
#[pyo3(signature = (g, start, target, cap = solver::DEFAULT_STATE_CAP))]
fn solve(g: &PyGraph, start: &str, target: &str, cap: usize) -> PyResult<Option<String>> {
    let p = puzzle(g)?;
    let a = parse_edge_set(&g.inner, start).map_err(py_err)?;
    let b = parse_edge_set(&g.inner, target).map_err(py_err)?;
    match solver::solve(&p, &a, &b, cap).map_err(py_err)? {
        edgeflip::Solution::Solved(w) => Ok(Some(format_move_sequence(&g.inner, &w).map_err(py_err)?)),
        edgeflip::Solution::Unsolvable { .. } => Ok(None),
        edgeflip::Solution::CapExceeded { cap } => Err(py_err(edgeflip::Error::CapExceeded { cap })),
    }
}

/// `(Z/2Z)^k x| S_n` description of the edge-flipping group.
#[pyfunction]
fn group_structure<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let s = structure::structure(&g.inner).map_err(py_err)?;
    let out = PyDict::new(py);
    out.set_item("n", s.n)?;
    out.set_item("m", s.m)?;
    out.set_item("k", s.k)?;
    out.set_item("branch", s.branch.as_str())?;
    out.set_item("order", s.order.clone())?;
    out.set_item("name", s.to_string())?;
    Ok(out)
}

/// Edge-flipping group order by enumeration.
#[pyfunction]
#[pyo3(signature = (g, cap = flip::DEFAULT_GROUP_CAP))]
fn group_order_bruteforce(g: &PyGraph, cap: usize) -> PyResult<usize> {
    flip::group_order_bruteforce(&g.inner, cap).map_err(py_err)
}

/// Vertex-flipping group order by enumeration.
#[pyfunction]
#[pyo3(signature = (g, cap = flip::DEFAULT_GROUP_CAP))]
fn vertex_group_order_bruteforce(g: &PyGraph, cap: usize) -> PyResult<num_bigint::BigUint> {
    vertex_flip::vertex_group_order_bruteforce(&g.inner, cap).map_err(py_err)
}

#[pyfunction]
fn groups_isomorphic(a: &PyGraph, b: &PyGraph) -> PyResult<bool> {
    structure::groups_isomorphic(&a.inner, &b.inner).map_err(py_err)
}

/// Invariant of a one-hub graph.
#[pyfunction]
fn pi1(m: usize, attachments: Vec<usize>) -> PyResult<usize> {
    let spec = vertex_flip::YGraphSpec::new(m, attachments).map_err(py_err)?;
    Ok(vertex_flip::pi1(&spec))
}

/// Group of a one-hub graph as `(name, order or None)`.
#[pyfunction]
fn classify_one_hub(m: usize, attachments: Vec<usize>) -> PyResult<(String, Option<num_bigint::BigUint>)> {
    let spec = vertex_flip::YGraphSpec::new(m, attachments).map_err(py_err)?;
    let d = vertex_flip::classify_y(&spec).map_err(py_err)?;
    Ok((d.to_string(), d.order()))
}

/// Runs the built-in oracle comparisons; true when all pass.
#[pyfunction]
fn selfcheck() -> PyResult<bool> {
    Ok(edgeflip::selfcheck::run_selfcheck().map_err(py_err)?.passed())
}

#[pymodule]
fn pyedgeflip(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(apply_move, m)?)?;
    m.add_function(wrap_pyfunction!(apply_moves, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(same_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_count, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(group_structure, m)?)?;
    m.add_function(wrap_pyfunction!(group_order_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(vertex_group_order_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(groups_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(pi1, m)?)?;
    m.add_function(wrap_pyfunction!(classify_one_hub, m)?)?;
    m.add_function(wrap_pyfunction!(selfcheck, m)?)?;
    Ok(())
}
