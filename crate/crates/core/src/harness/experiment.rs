use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use log::{info, warn};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{generate_erdos_renyi, generate_regular, Graph};
use crate::harness::compare::{compare_strategies, write_comparison};
use crate::harness::config::{Ensemble, ExperimentConfig, Strategy};
use crate::harness::report::{ExperimentReport, InstanceReport, MANIFEST_FILE};
use crate::seeding::child_seed;
use crate::strategies::{parameters_fixing_sweep, random_init_sweep, Instance, SweepOptions};

/// Environment variable holding the worker-thread count.
pub const WORKERS_ENV: &str = "PFQAOA_WORKERS";

/// Retries allowed when a random instance comes out without edges.
pub const EMPTY_INSTANCE_RETRIES: u64 = 100;

const INSTANCE_KEY: u64 = 1;
const TRIAL_KEY: u64 = 2;

/// Thread pool sized from `PFQAOA_WORKERS`, or available parallelism.
pub fn worker_pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var(WORKERS_ENV) {
        let n: usize = v
            .parse()
            .map_err(|_| Error::param(format!("{WORKERS_ENV}={v:?} is not a count")))?;
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))
}

/// A generated instance before any optimisation.
#[derive(Debug, Clone)]
pub struct GeneratedInstance {
    pub id: String,
    pub seed: u64,
    pub attempts: u64,
    pub trial_seed: u64,
    pub instance: Instance,
}

fn draw_graph(ensemble: Ensemble, n: usize, seed: u64) -> Result<Graph> {
    match ensemble {
        Ensemble::Regular { degree } => generate_regular(n, degree, seed),
        Ensemble::ErdosRenyi { prob } => generate_erdos_renyi(n, prob, seed),
    }
}

/// Draws `instances_per_n` graphs for every vertex count. Edgeless draws are
/// skipped with a warning and redrawn from the next seed.
pub fn generate_instances(config: &ExperimentConfig) -> Result<Vec<GeneratedInstance>> {
    let mut out = Vec::new();
    for &n in &config.node_counts {
        for i in 0..config.instances_per_n {
            let key = [INSTANCE_KEY, n as u64, i as u64];
            let mut found = None;
            for attempt in 0..EMPTY_INSTANCE_RETRIES {
                let seed = child_seed(config.master_seed, &[key[0], key[1], key[2], attempt]);
                let graph = draw_graph(config.ensemble, n, seed)?;
                if graph.num_edges() == 0 {
                    warn!("instance n={n} #{i}: seed {seed} produced no edges, redrawing");
                    continue;
                }
                found = Some((seed, attempt, graph));
                break;
            }
            let (seed, attempts, graph) = found.ok_or_else(|| {
                Error::Generation(format!(
                    "instance n={n} #{i}: no graph with edges after {EMPTY_INSTANCE_RETRIES} draws"
                ))
            })?;
            out.push(GeneratedInstance {
                id: format!("n{n}_i{i}"),
                seed,
                attempts: attempts + 1,
                trial_seed: child_seed(config.master_seed, &[TRIAL_KEY, n as u64, i as u64]),
                instance: Instance::new(graph)?,
            });
        }
    }
    Ok(out)
}

fn sweep(
    strategy: Strategy,
    instance: &Instance,
    p_max: usize,
    seed: u64,
    options: &SweepOptions,
) -> Result<Vec<crate::strategies::DepthRecord>> {
    match strategy {
        Strategy::Random => random_init_sweep(instance, p_max, seed, options),
        Strategy::ParametersFixing => parameters_fixing_sweep(instance, p_max, seed, options),
    }
}

/// Runs one strategy over already generated instances.
pub fn run_strategy(
    strategy: Strategy,
    instances: &[GeneratedInstance],
    p_max: usize,
    options: &SweepOptions,
) -> Result<ExperimentReport> {
    let reports = instances
        .par_iter()
        .map(|g| {
            info!("{}: {} (n={})", strategy.as_str(), g.id, g.instance.graph().n());
            let records = sweep(strategy, &g.instance, p_max, g.trial_seed, options)?;
            Ok(InstanceReport {
                id: g.id.clone(),
                seed: g.seed,
                trial_seed: g.trial_seed,
                graph: g.instance.graph().clone(),
                c_max: g.instance.c_max(),
                records,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport {
        strategy,
        instances: reports,
    })
}

#[derive(Serialize)]
struct ManifestInstance<'a> {
    id: &'a str,
    n: usize,
    seed: u64,
    generation_attempts: u64,
    trial_seed: u64,
    c_max: usize,
    edges: &'a [(usize, usize)],
}

#[derive(Serialize)]
struct Manifest<'a> {
    tool: &'static str,
    version: &'static str,
    created_unix: u64,
    strategy: &'static str,
    config: &'a ExperimentConfig,
    instances: Vec<ManifestInstance<'a>>,
}

fn write_manifest(
    dir: &Path,
    config: &ExperimentConfig,
    strategy: Strategy,
    instances: &[GeneratedInstance],
) -> Result<()> {
    let created_unix = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let manifest = Manifest {
        tool: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
        created_unix,
        strategy: strategy.as_str(),
        config,
        instances: instances
            .iter()
            .map(|g| ManifestInstance {
                id: &g.id,
                n: g.instance.graph().n(),
                seed: g.seed,
                generation_attempts: g.attempts,
                trial_seed: g.trial_seed,
                c_max: g.instance.c_max(),
                edges: g.instance.graph().edges(),
            })
            .collect(),
    };
    let text = serde_json::to_string_pretty(&manifest).map_err(std::io::Error::other)?;
    std::fs::write(dir.join(MANIFEST_FILE), text + "\n")?;
    Ok(())
}

/// Where a strategy's files go. A single-strategy run writes straight into
/// the output directory; `both` uses one subdirectory per strategy plus a
/// `comparison.csv` at the top.
pub fn strategy_dir(config: &ExperimentConfig, strategy: Strategy) -> PathBuf {
    if config.strategy.strategies().len() == 1 {
        config.output_dir.clone()
    } else {
        config.output_dir.join(strategy.as_str())
    }
}

/// Generates instances, runs every configured strategy and writes the
/// report files.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentReport>> {
    config.validate()?;
    let pool = worker_pool()?;
    pool.install(|| {
        let instances = generate_instances(config)?;
        let options = config.sweep_options();
        let mut reports = Vec::new();
        for strategy in config.strategy.strategies() {
            let report = run_strategy(strategy, &instances, config.p_max, &options)?;
            let dir = strategy_dir(config, strategy);
            report.write_csvs(&dir)?;
            write_manifest(&dir, config, strategy, &instances)?;
            reports.push(report);
        }
        if let [a, b] = reports.as_slice() {
            let cmp = compare_strategies(&a.aggregate_rows(), &b.aggregate_rows())?;
            write_comparison(&config.output_dir, &cmp)?;
        }
        Ok(reports)
    })
}

/// Runs one strategy on a single graph. The instance id is `id`, and the
/// trial seeds hang off `master_seed` directly.
pub fn solve_graph(
    id: &str,
    graph: Graph,
    strategy: Strategy,
    p_max: usize,
    master_seed: u64,
    options: &SweepOptions,
) -> Result<ExperimentReport> {
    let instance = Instance::new(graph)?;
    let records = sweep(strategy, &instance, p_max, master_seed, options)?;
    Ok(ExperimentReport {
        strategy,
        instances: vec![InstanceReport {
            id: id.to_string(),
            seed: master_seed,
            trial_seed: master_seed,
            c_max: instance.c_max(),
            graph: instance.graph().clone(),
            records,
        }],
    })
}
