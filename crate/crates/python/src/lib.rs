//! Python bindings for `pfqaoa-core`.
//!
//! Angles cross the boundary as two lists, `gammas` and `betas`. Graphs are
//! `Graph` objects; sweep results come back as `DepthRecord` objects.

use num_complex::Complex64;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

use pfqaoa_core::graph::{format_bitstring, parse_bitstring};
use pfqaoa_core::harness::landscape_grid as core_landscape_grid;
use pfqaoa_core::{
    self as core, Error, OptimizerOptions, ParameterVector, QaoaProblem, SweepOptions,
};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn params(gammas: Vec<f64>, betas: Vec<f64>) -> PyResult<ParameterVector> {
    ParameterVector::new(gammas, betas).map_err(to_py)
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pfqaoa", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self {
            inner: core::Graph::new(n, edges).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn regular(n: usize, degree: usize, seed: u64) -> PyResult<Self> {
        Ok(Self {
            inner: core::generate_regular(n, degree, seed).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn erdos_renyi(n: usize, prob: f64, seed: u64) -> PyResult<Self> {
        Ok(Self {
            inner: core::generate_erdos_renyi(n, prob, seed).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: core::Graph::complete(n).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        Ok(Self {
            inner: core::Graph::cycle(n).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: core::Graph::from_text(text).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn read(path: &str) -> PyResult<Self> {
        Ok(Self {
            inner: core::Graph::read(path).map_err(to_py)?,
        })
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn num_edges(&self) -> usize {
        self.inner.num_edges()
    }

    /// Cut value of a `"0101..."` assignment (position `j` is vertex `j`).
    fn cut_value(&self, assignment: &str) -> PyResult<usize> {
        let bits = parse_bitstring(assignment).map_err(to_py)?;
        core::cut_value(&self.inner, &bits).map_err(to_py)
    }

    /// `(c_max, witness)` by exhaustive enumeration.
    fn max_cut(&self) -> PyResult<(usize, String)> {
        let sol = core::max_cut_bruteforce(&self.inner).map_err(to_py)?;
        Ok((sol.c_max, format_bitstring(&sol.witness)))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={})", self.inner.n(), self.inner.num_edges())
    }
}

#[pyclass(name = "Trial", module = "pfqaoa", frozen, get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyTrial {
    depth: usize,
    trial: usize,
    seed: u64,
    zero_initialized: bool,
    alpha: f64,
    f_opt: f64,
    n_evals: usize,
    termination: &'static str,
    /// Canonical optimal angles.
    gammas: Vec<f64>,
    betas: Vec<f64>,
    initial_gammas: Vec<f64>,
    initial_betas: Vec<f64>,
}

impl From<&core::TrialResult> for PyTrial {
    fn from(t: &core::TrialResult) -> Self {
        let canon = t.optimal_params.canonical();
        Self {
            depth: t.depth,
            trial: t.trial,
            seed: t.seed,
            zero_initialized: t.zero_initialized,
            alpha: t.alpha,
            f_opt: t.f_opt,
            n_evals: t.n_evals,
            termination: t.termination.as_str(),
            gammas: canon.gammas().to_vec(),
            betas: canon.betas().to_vec(),
            initial_gammas: t.initial_params.gammas().to_vec(),
            initial_betas: t.initial_params.betas().to_vec(),
        }
    }
}

#[pyclass(name = "DepthRecord", module = "pfqaoa", frozen, get_all)]
struct PyDepthRecord {
    depth: usize,
    mean_alpha: f64,
    std_alpha: f64,
    alphas: Vec<f64>,
    best: PyTrial,
    trials: Vec<PyTrial>,
}

#[pymethods]
impl PyDepthRecord {
    fn __repr__(&self) -> String {
        format!(
            "DepthRecord(depth={}, mean_alpha={:.6}, std_alpha={:.6}, best_alpha={:.6})",
            self.depth, self.mean_alpha, self.std_alpha, self.best.alpha
        )
    }
}

impl From<&core::DepthRecord> for PyDepthRecord {
    fn from(r: &core::DepthRecord) -> Self {
        Self {
            depth: r.depth,
            mean_alpha: r.mean_alpha,
            std_alpha: r.std_alpha,
            alphas: r.all_alphas(),
            best: r.best_trial().into(),
            trials: r.trials.iter().map(Into::into).collect(),
        }
    }
}

/// Cut value of every basis state (bit `j` of the index is vertex `j`).
#[pyfunction]
fn cut_spectrum(graph: &PyGraph) -> PyResult<Vec<u32>> {
    Ok(core::CutSpectrum::new(&graph.inner)
        .map_err(to_py)?
        .values()
        .to_vec())
}

/// QAOA state amplitudes after the given layers.
#[pyfunction]
fn evolve(graph: &PyGraph, gammas: Vec<f64>, betas: Vec<f64>) -> PyResult<Vec<Complex64>> {
    let state = core::sim::evolve(&graph.inner, &params(gammas, betas)?).map_err(to_py)?;
    Ok(state.amplitudes().to_vec())
}

/// Expectation of the cut Hamiltonian in the QAOA state.
#[pyfunction]
fn fp(graph: &PyGraph, gammas: Vec<f64>, betas: Vec<f64>) -> PyResult<f64> {
    core::sim::fp(&graph.inner, &params(gammas, betas)?).map_err(to_py)
}

fn optimizer_options(max_evals: usize, tol: f64, initial_step: f64) -> OptimizerOptions {
    OptimizerOptions {
        max_evals,
        f_abs_tol: tol,
        x_abs_tol: tol,
        initial_step,
    }
}

/// Nelder-Mead maximisation of `fp` from `(gammas, betas)`. Returns
/// `(gammas, betas, f_opt, n_evals, termination)`.
#[pyfunction]
#[pyo3(signature = (graph, gammas, betas, max_evals=1000, tol=1e-4, initial_step=0.05))]
fn maximize_fp(
    py: Python<'_>,
    graph: &PyGraph,
    gammas: Vec<f64>,
    betas: Vec<f64>,
    max_evals: usize,
    tol: f64,
    initial_step: f64,
) -> PyResult<(Vec<f64>, Vec<f64>, f64, usize, &'static str)> {
    let x0 = params(gammas, betas)?.to_flat();
    let problem = QaoaProblem::new(&graph.inner).map_err(to_py)?;
    let opts = optimizer_options(max_evals, tol, initial_step);
    let res = py
        .detach(|| core::maximize(|x| problem.fp_flat(x), &x0, &opts))
        .map_err(to_py)?;
    let best = ParameterVector::from_flat(&res.x_opt).map_err(to_py)?;
    Ok((
        best.gammas().to_vec(),
        best.betas().to_vec(),
        res.f_opt,
        res.n_evals,
        res.termination.as_str(),
    ))
}

fn sweep_options(trials: usize, max_evals: usize, tol: f64, zero_trial: bool) -> SweepOptions {
    SweepOptions {
        trials_per_depth: trials,
        optimizer: optimizer_options(max_evals, tol, OptimizerOptions::default().initial_step),
        augmented_zero_trial: zero_trial,
    }
}

/// Random initialisation at depths `1..=p_max`.
#[pyfunction]
#[pyo3(signature = (graph, p_max, trials=20, seed=0, max_evals=1000, tol=1e-4))]
fn random_init_sweep(
    py: Python<'_>,
    graph: &PyGraph,
    p_max: usize,
    trials: usize,
    seed: u64,
    max_evals: usize,
    tol: f64,
) -> PyResult<Vec<PyDepthRecord>> {
    let inst = core::Instance::new(graph.inner.clone()).map_err(to_py)?;
    let opts = sweep_options(trials, max_evals, tol, false);
    let recs = py
        .detach(|| core::random_init_sweep(&inst, p_max, seed, &opts))
        .map_err(to_py)?;
    Ok(recs.iter().map(Into::into).collect())
}

/// Parameters fixing at depths `1..=p_max`.
#[pyfunction]
#[pyo3(signature = (graph, p_max, trials=20, seed=0, augmented_zero_trial=true, max_evals=1000, tol=1e-4))]
#[allow(clippy::too_many_arguments)]
fn parameters_fixing_sweep(
    py: Python<'_>,
    graph: &PyGraph,
    p_max: usize,
    trials: usize,
    seed: u64,
    augmented_zero_trial: bool,
    max_evals: usize,
    tol: f64,
) -> PyResult<Vec<PyDepthRecord>> {
    let inst = core::Instance::new(graph.inner.clone()).map_err(to_py)?;
    let opts = sweep_options(trials, max_evals, tol, augmented_zero_trial);
    let recs = py
        .detach(|| core::parameters_fixing_sweep(&inst, p_max, seed, &opts))
        .map_err(to_py)?;
    Ok(recs.iter().map(Into::into).collect())
}

/// `(gammas, betas, values)` with `values[i][j] = F(prefix, gammas[i], betas[j])`.
#[pyfunction]
#[pyo3(signature = (graph, resolution, prefix_gammas=Vec::new(), prefix_betas=Vec::new()))]
fn landscape_grid(
    py: Python<'_>,
    graph: &PyGraph,
    resolution: usize,
    prefix_gammas: Vec<f64>,
    prefix_betas: Vec<f64>,
) -> PyResult<(Vec<f64>, Vec<f64>, Vec<Vec<f64>>)> {
    let prefix = params(prefix_gammas, prefix_betas)?;
    let problem = QaoaProblem::new(&graph.inner).map_err(to_py)?;
    let grid = py
        .detach(|| core_landscape_grid(&problem, &prefix, resolution))
        .map_err(to_py)?;
    Ok((grid.gammas, grid.betas, grid.values))
}

#[pymodule]
pub fn pfqaoa(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyTrial>()?;
    m.add_class::<PyDepthRecord>()?;
    m.add_function(wrap_pyfunction!(cut_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(evolve, m)?)?;
    m.add_function(wrap_pyfunction!(fp, m)?)?;
    m.add_function(wrap_pyfunction!(maximize_fp, m)?)?;
    m.add_function(wrap_pyfunction!(random_init_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(parameters_fixing_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(landscape_grid, m)?)?;
    Ok(())
}
