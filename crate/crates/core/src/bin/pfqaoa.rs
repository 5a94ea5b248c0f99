use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pfqaoa_core::graph::{format_bitstring, generate_erdos_renyi, generate_regular};
use pfqaoa_core::harness::compare::write_comparison;
use pfqaoa_core::harness::{
    compare_dirs, landscape_grid, run_experiment, solve_graph, worker_pool, ExperimentConfig,
    Strategy,
};
use pfqaoa_core::{
    max_cut_bruteforce, Error, Graph, OptimizerOptions, ParameterVector, QaoaProblem, Result,
    SweepOptions,
};

#[derive(Parser)]
#[command(name = "pfqaoa", version, about = "Exact QAOA Max-Cut experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Regular,
    Er,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Random,
    Pf,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random graph in the text format.
    GenGraph {
        #[arg(long, value_enum)]
        kind: GraphKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact maximum cut by enumeration.
    Maxcut {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Sweep one strategy over depths 1..=P on a single graph.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        strategy: StrategyArg,
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 20)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Disable the extra zero-initialised trial for parameters fixing.
        #[arg(long)]
        no_zero_trial: bool,
        /// Write report CSVs into this directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment described by a TOML config file.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        p_max: Option<usize>,
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Evaluate F_p over the last (gamma, beta) pair.
    Landscape {
        #[arg(long)]
        graph: PathBuf,
        /// Fixed earlier angles, comma separated: gamma_1..gamma_{p-1},beta_1..beta_{p-1}.
        #[arg(long, default_value = "")]
        prefix: String,
        #[arg(long)]
        resolution: usize,
        /// Output CSV; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the aggregate.csv of two report directories (delta = b - a).
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        /// Directory for comparison.csv and comparison_summary.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_prefix(s: &str) -> Result<ParameterVector> {
    let values = s
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Error::Parameter(format!("bad prefix value {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    ParameterVector::from_flat(&values)
}

fn instance_id(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "graph".into())
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::GenGraph {
            kind,
            n,
            degree,
            prob,
            seed,
            out,
        } => {
            let g = match kind {
                GraphKind::Regular => generate_regular(n, degree, seed)?,
                GraphKind::Er => generate_erdos_renyi(n, prob, seed)?,
            };
            match out {
                Some(path) => g.write(path)?,
                None => print!("{}", g.to_text()),
            }
        }
        Command::Maxcut { graph } => {
            let g = Graph::read(&graph)?;
            let sol = max_cut_bruteforce(&g)?;
            println!("c_max {}", sol.c_max);
            println!("witness {}", format_bitstring(&sol.witness));
        }
        Command::Solve {
            graph,
            strategy,
            p,
            trials,
            seed,
            no_zero_trial,
            out,
        } => {
            let g = Graph::read(&graph)?;
            let strategy = match strategy {
                StrategyArg::Random => Strategy::Random,
                StrategyArg::Pf => Strategy::ParametersFixing,
            };
            let options = SweepOptions {
                trials_per_depth: trials,
                optimizer: OptimizerOptions::default(),
                augmented_zero_trial: !no_zero_trial,
            };
            let report = worker_pool()?
                .install(|| solve_graph(&instance_id(&graph), g, strategy, p, seed, &options))?;
            println!("depth,mean_alpha,std_alpha,best_alpha");
            for r in &report.instances[0].records {
                println!(
                    "{},{:.6},{:.6},{:.6}",
                    r.depth,
                    r.mean_alpha,
                    r.std_alpha,
                    r.best_trial().alpha
                );
            }
            if let Some(dir) = out {
                report.write_csvs(&dir)?;
            }
        }
        Command::Experiment {
            config,
            seed,
            out,
            p_max,
            trials,
        } => {
            let mut cfg = ExperimentConfig::read(&config)?;
            if let Some(s) = seed {
                cfg.master_seed = s;
            }
            if let Some(dir) = out {
                cfg.output_dir = dir;
            }
            if let Some(p) = p_max {
                cfg.p_max = p;
            }
            if let Some(t) = trials {
                cfg.trials_per_depth = t;
            }
            let reports = run_experiment(&cfg)?;
            for report in &reports {
                for row in report.pooled_rows() {
                    println!(
                        "{} n={} p={} mean_alpha={:.6} std_alpha={:.6}",
                        report.strategy.as_str(),
                        row.n,
                        row.depth,
                        row.mean_alpha,
                        row.std_alpha
                    );
                }
            }
            println!("wrote {}", cfg.output_dir.display());
        }
        Command::Landscape {
            graph,
            prefix,
            resolution,
            out,
        } => {
            let g = Graph::read(&graph)?;
            let problem = QaoaProblem::new(&g)?;
            let prefix = parse_prefix(&prefix)?;
            let grid = worker_pool()?.install(|| landscape_grid(&problem, &prefix, resolution))?;
            match out {
                Some(path) => grid.write_csv(std::fs::File::create(path)?)?,
                None => grid.write_csv(std::io::stdout().lock())?,
            }
        }
        Command::Compare { a, b, out } => {
            let cmp = compare_dirs(&a, &b)?;
            println!("instance_id,depth,delta,outcome");
            for r in &cmp.rows {
                println!("{},{},{:+.6},{:?}", r.instance_id, r.depth, r.delta, r.outcome);
            }
            let s = cmp.summary;
            println!("wins={} losses={} ties={}", s.wins, s.losses, s.ties);
            if let Some(dir) = out {
                write_comparison(&dir, &cmp)?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
