//! Exact statevector QAOA for Max-Cut, with the random-initialisation and
//! parameters-fixing strategies and an experiment harness around them.

pub mod error;
pub mod graph;
pub mod harness;
pub mod nelder_mead;
pub mod seeding;
pub mod sim;
pub mod strategies;

pub use error::{Error, Result};
pub use graph::{
    cut_value, generate_erdos_renyi, generate_regular, max_cut_bruteforce, Graph, MaxCutSolution,
};
pub use nelder_mead::{maximize, minimize, OptimizationResult, OptimizerOptions, Termination};
pub use sim::{CutSpectrum, ParameterVector, QaoaProblem, StateVector};
pub use strategies::{
    drift_tracks, parameters_fixing_sweep, random_init_sweep, random_trial, DepthRecord,
    DriftTrack, Instance, SweepOptions, TrialResult,
};
