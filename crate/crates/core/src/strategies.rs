//! Initialisation protocols compared across QAOA depths.
//!
//! * Random initialisation: at every depth `p`, each trial draws all `2p`
//!   angles uniformly (`gamma` on `[0, 2pi)`, `beta` on `[0, pi)`) and
//!   maximises `F_p` from there.
//! * Parameters fixing: depth 1 is random initialisation. At depth `q > 1`
//!   each trial starts from the best depth-`(q-1)` optimum with one freshly
//!   drawn `(gamma_q, beta_q)` pair appended, and all `2q` angles are then
//!   optimised. The best trial becomes the prefix for depth `q + 1`.
//!
//! Trial `k` at depth `q` always draws from the seed
//! `child_seed(master, [q, k])`, so both protocols see the same depth-1
//! starting points and results do not depend on scheduling.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{max_cut_bruteforce, Graph};
use crate::nelder_mead::{maximize, OptimizerOptions, Termination};
use crate::seeding::child_seed;
use crate::sim::{ParameterVector, QaoaProblem};

/// A graph together with its simulator data and exact maximum cut.
#[derive(Debug, Clone)]
pub struct Instance {
    graph: Graph,
    problem: QaoaProblem,
    c_max: usize,
}

impl Instance {
    pub fn new(graph: Graph) -> Result<Self> {
        let c_max = max_cut_bruteforce(&graph)?.c_max;
        let problem = QaoaProblem::new(&graph)?;
        Ok(Self {
            graph,
            problem,
            c_max,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn problem(&self) -> &QaoaProblem {
        &self.problem
    }

    pub fn c_max(&self) -> usize {
        self.c_max
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    pub trials_per_depth: usize,
    pub optimizer: OptimizerOptions,
    /// Parameters fixing only: add one extra trial per depth `q >= 2` whose
    /// new pair starts at `(0, 0)`. Its starting value equals the previous
    /// depth's best, so the best value can never regress by more than the
    /// optimizer tolerance. Off reproduces the bare protocol.
    pub augmented_zero_trial: bool,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            trials_per_depth: 20,
            optimizer: OptimizerOptions::default(),
            augmented_zero_trial: true,
        }
    }
}

impl SweepOptions {
    fn validate(&self) -> Result<()> {
        if self.trials_per_depth == 0 {
            return Err(Error::param("trials_per_depth must be positive"));
        }
        self.optimizer.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialResult {
    pub depth: usize,
    pub trial: usize,
    pub seed: u64,
    /// True for the augmented trial whose new pair started at zero.
    pub zero_initialized: bool,
    pub initial_params: ParameterVector,
    /// Optimizer output, not reduced to the canonical domain.
    pub optimal_params: ParameterVector,
    pub f_opt: f64,
    pub alpha: f64,
    pub n_evals: usize,
    pub termination: Termination,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DepthRecord {
    pub depth: usize,
    pub trials: Vec<TrialResult>,
    pub best_index: usize,
    pub mean_alpha: f64,
    /// Population standard deviation.
    pub std_alpha: f64,
}

impl DepthRecord {
    fn from_trials(depth: usize, trials: Vec<TrialResult>) -> Self {
        // strict > keeps the lowest index on ties
        let mut best_index = 0;
        for (i, t) in trials.iter().enumerate() {
            if t.f_opt > trials[best_index].f_opt {
                best_index = i;
            }
        }
        let alphas: Vec<f64> = trials.iter().map(|t| t.alpha).collect();
        let (mean_alpha, std_alpha) = mean_std(&alphas);
        Self {
            depth,
            trials,
            best_index,
            mean_alpha,
            std_alpha,
        }
    }

    pub fn best_trial(&self) -> &TrialResult {
        &self.trials[self.best_index]
    }

    pub fn all_alphas(&self) -> Vec<f64> {
        self.trials.iter().map(|t| t.alpha).collect()
    }
}

/// Mean and population standard deviation.
pub fn mean_std(xs: &[f64]) -> (f64, f64) {
    if xs.is_empty() {
        return (f64::NAN, f64::NAN);
    }
    let n = xs.len() as f64;
    let mean = xs.iter().sum::<f64>() / n;
    let var = xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n;
    (mean, var.sqrt())
}

fn draw_pair(rng: &mut impl Rng) -> (f64, f64) {
    let g = rng.random_range(0.0..2.0 * PI);
    let b = rng.random_range(0.0..PI);
    (g, b)
}

fn optimize_from(
    instance: &Instance,
    depth: usize,
    trial: usize,
    seed: u64,
    zero_initialized: bool,
    init: ParameterVector,
    options: &OptimizerOptions,
) -> Result<TrialResult> {
    let problem = instance.problem();
    let res = maximize(|x| problem.fp_flat(x), &init.to_flat(), options)?;
    Ok(TrialResult {
        depth,
        trial,
        seed,
        zero_initialized,
        optimal_params: ParameterVector::from_flat(&res.x_opt)?,
        initial_params: init,
        f_opt: res.f_opt,
        alpha: res.f_opt / instance.c_max() as f64,
        n_evals: res.n_evals,
        termination: res.termination,
    })
}

/// One randomly initialised optimisation at depth `p`.
pub fn random_trial(
    instance: &Instance,
    p: usize,
    trial: usize,
    seed: u64,
    options: &OptimizerOptions,
) -> Result<TrialResult> {
    if p == 0 {
        return Err(Error::param("depth must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut init = ParameterVector::zeros(0);
    for _ in 0..p {
        let (g, b) = draw_pair(&mut rng);
        init = init.extended(g, b);
    }
    optimize_from(instance, p, trial, seed, false, init, options)
}

/// Random initialisation at every depth `1..=p_max`.
pub fn random_init_sweep(
    instance: &Instance,
    p_max: usize,
    master_seed: u64,
    options: &SweepOptions,
) -> Result<Vec<DepthRecord>> {
    options.validate()?;
    if p_max == 0 {
        return Err(Error::param("p_max must be at least 1"));
    }
    (1..=p_max)
        .map(|p| {
            let trials = (0..options.trials_per_depth)
                .into_par_iter()
                .map(|k| {
                    let seed = child_seed(master_seed, &[p as u64, k as u64]);
                    random_trial(instance, p, k, seed, &options.optimizer)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(DepthRecord::from_trials(p, trials))
        })
        .collect()
}

/// Layer-by-layer parameters fixing up to depth `p_max`.
pub fn parameters_fixing_sweep(
    instance: &Instance,
    p_max: usize,
    master_seed: u64,
    options: &SweepOptions,
) -> Result<Vec<DepthRecord>> {
    options.validate()?;
    if p_max == 0 {
        return Err(Error::param("p_max must be at least 1"));
    }
    let mut records: Vec<DepthRecord> = Vec::with_capacity(p_max);
    let mut prefix = ParameterVector::zeros(0);
    for q in 1..=p_max {
        let with_zero = options.augmented_zero_trial && q >= 2;
        let n_trials = options.trials_per_depth + usize::from(with_zero);
        let trials = (0..n_trials)
            .into_par_iter()
            .map(|k| {
                let seed = child_seed(master_seed, &[q as u64, k as u64]);
                let zero = k == options.trials_per_depth;
                let (g, b) = if zero {
                    (0.0, 0.0)
                } else {
                    draw_pair(&mut ChaCha8Rng::seed_from_u64(seed))
                };
                let init = prefix.extended(g, b);
                optimize_from(instance, q, k, seed, zero, init, &options.optimizer)
            })
            .collect::<Result<Vec<_>>>()?;
        let record = DepthRecord::from_trials(q, trials);
        prefix = record.best_trial().optimal_params.clone();
        records.push(record);
    }
    Ok(records)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AngleKind {
    Gamma,
    Beta,
}

impl AngleKind {
    pub fn as_str(self) -> &'static str {
        match self {
            AngleKind::Gamma => "gamma",
            AngleKind::Beta => "beta",
        }
    }
}

/// Value of the `index`-th (1-based) gamma or beta in the best trial of
/// every depth that has it.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftTrack {
    pub index: usize,
    pub kind: AngleKind,
    /// `(depth, canonical value)` in increasing depth order.
    pub values: Vec<(usize, f64)>,
}

pub fn drift_tracks(records: &[DepthRecord]) -> Vec<DriftTrack> {
    let p_max = records.iter().map(|r| r.depth).max().unwrap_or(0);
    let canonical: Vec<(usize, ParameterVector)> = records
        .iter()
        .map(|r| (r.depth, r.best_trial().optimal_params.canonical()))
        .collect();
    let mut tracks = Vec::with_capacity(2 * p_max);
    for index in 1..=p_max {
        for kind in [AngleKind::Gamma, AngleKind::Beta] {
            let values = canonical
                .iter()
                .filter(|(q, _)| *q >= index)
                .map(|(q, params)| {
                    let v = match kind {
                        AngleKind::Gamma => params.gammas()[index - 1],
                        AngleKind::Beta => params.betas()[index - 1],
                    };
                    (*q, v)
                })
                .collect();
            tracks.push(DriftTrack {
                index,
                kind,
                values,
            });
        }
    }
    tracks
}
