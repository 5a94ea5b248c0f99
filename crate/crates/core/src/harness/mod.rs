//! Experiment orchestration and file output.

pub mod compare;
pub mod config;
pub mod experiment;
pub mod landscape;
pub mod report;

pub use compare::{compare_dirs, compare_reports, compare_strategies, Comparison};
pub use config::{Ensemble, ExperimentConfig, Strategy, StrategyChoice};
pub use experiment::{generate_instances, run_experiment, run_strategy, solve_graph, worker_pool};
pub use landscape::{landscape_grid, LandscapeGrid};
pub use report::{ExperimentReport, InstanceReport};
