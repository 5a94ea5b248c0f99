//! In-memory experiment results and their CSV files.
//!
//! Every report directory holds:
//!
//! * `trials.csv`: `instance_id,n,depth,trial,seed,alpha,f_opt,c_max,n_evals,termination,zero_init,gammas,betas`
//!   with one row per optimisation; `gammas`/`betas` are the canonical
//!   optimal angles separated by spaces.
//! * `aggregate.csv`: `instance_id,n,depth,trials,mean_alpha,std_alpha,best_alpha,best_f_opt,best_trial`.
//! * `pooled.csv`: `n,depth,instances,trials,mean_alpha,std_alpha` over all
//!   trials of all instances with that vertex count.
//! * `drift.csv` (parameters fixing only): `instance_id,index,kind,depth,value`.
//! * `manifest.json`: configuration, seeds and instance edge lists.
//!
//! Floats are written with 17 significant digits so they parse back to the
//! identical `f64`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::harness::config::Strategy;
use crate::strategies::{drift_tracks, mean_std, DepthRecord};

pub const TRIALS_FILE: &str = "trials.csv";
pub const AGGREGATE_FILE: &str = "aggregate.csv";
pub const POOLED_FILE: &str = "pooled.csv";
pub const DRIFT_FILE: &str = "drift.csv";
pub const MANIFEST_FILE: &str = "manifest.json";

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_list(xs: &[f64]) -> String {
    xs.iter().map(|&x| fmt_f64(x)).collect::<Vec<_>>().join(" ")
}

#[derive(Debug, Clone)]
pub struct InstanceReport {
    pub id: String,
    pub seed: u64,
    pub trial_seed: u64,
    pub graph: Graph,
    pub c_max: usize,
    pub records: Vec<DepthRecord>,
}

#[derive(Debug, Clone)]
pub struct ExperimentReport {
    pub strategy: Strategy,
    pub instances: Vec<InstanceReport>,
}

/// One line of `aggregate.csv`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AggregateRow {
    pub instance_id: String,
    pub n: usize,
    pub depth: usize,
    pub trials: usize,
    #[serde(with = "float17")]
    pub mean_alpha: f64,
    #[serde(with = "float17")]
    pub std_alpha: f64,
    #[serde(with = "float17")]
    pub best_alpha: f64,
    #[serde(with = "float17")]
    pub best_f_opt: f64,
    pub best_trial: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PooledRow {
    pub n: usize,
    pub depth: usize,
    pub instances: usize,
    pub trials: usize,
    #[serde(with = "float17")]
    pub mean_alpha: f64,
    #[serde(with = "float17")]
    pub std_alpha: f64,
}

pub(crate) mod float17 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::fmt_f64(*x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl ExperimentReport {
    pub fn aggregate_rows(&self) -> Vec<AggregateRow> {
        let mut rows = Vec::new();
        for inst in &self.instances {
            for r in &inst.records {
                let best = r.best_trial();
                rows.push(AggregateRow {
                    instance_id: inst.id.clone(),
                    n: inst.graph.n(),
                    depth: r.depth,
                    trials: r.trials.len(),
                    mean_alpha: r.mean_alpha,
                    std_alpha: r.std_alpha,
                    best_alpha: best.alpha,
                    best_f_opt: best.f_opt,
                    best_trial: best.trial,
                });
            }
        }
        rows
    }

    /// Statistics over all trials of all instances sharing a vertex count.
    pub fn pooled_rows(&self) -> Vec<PooledRow> {
        let mut groups: BTreeMap<(usize, usize), (usize, Vec<f64>)> = BTreeMap::new();
        for inst in &self.instances {
            for r in &inst.records {
                let e = groups.entry((inst.graph.n(), r.depth)).or_default();
                e.0 += 1;
                e.1.extend(r.all_alphas());
            }
        }
        groups
            .into_iter()
            .map(|((n, depth), (instances, alphas))| {
                let (mean_alpha, std_alpha) = mean_std(&alphas);
                PooledRow {
                    n,
                    depth,
                    instances,
                    trials: alphas.len(),
                    mean_alpha,
                    std_alpha,
                }
            })
            .collect()
    }

    pub fn write_trials(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record([
            "instance_id",
            "n",
            "depth",
            "trial",
            "seed",
            "alpha",
            "f_opt",
            "c_max",
            "n_evals",
            "termination",
            "zero_init",
            "gammas",
            "betas",
        ])?;
        for inst in &self.instances {
            for r in &inst.records {
                for t in &r.trials {
                    let canon = t.optimal_params.canonical();
                    out.write_record([
                        inst.id.clone(),
                        inst.graph.n().to_string(),
                        t.depth.to_string(),
                        t.trial.to_string(),
                        t.seed.to_string(),
                        fmt_f64(t.alpha),
                        fmt_f64(t.f_opt),
                        inst.c_max.to_string(),
                        t.n_evals.to_string(),
                        t.termination.as_str().to_string(),
                        u8::from(t.zero_initialized).to_string(),
                        fmt_list(canon.gammas()),
                        fmt_list(canon.betas()),
                    ])?;
                }
            }
        }
        out.flush()?;
        Ok(())
    }

    pub fn write_drift(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["instance_id", "index", "kind", "depth", "value"])?;
        for inst in &self.instances {
            for track in drift_tracks(&inst.records) {
                for &(depth, value) in &track.values {
                    out.write_record([
                        inst.id.clone(),
                        track.index.to_string(),
                        track.kind.as_str().to_string(),
                        depth.to_string(),
                        fmt_f64(value),
                    ])?;
                }
            }
        }
        out.flush()?;
        Ok(())
    }

    /// Writes every CSV into `dir` (created if missing). The manifest is
    /// written separately by the caller.
    pub fn write_csvs(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        self.write_trials(std::fs::File::create(dir.join(TRIALS_FILE))?)?;
        write_rows(&dir.join(AGGREGATE_FILE), &self.aggregate_rows())?;
        write_rows(&dir.join(POOLED_FILE), &self.pooled_rows())?;
        if self.strategy == Strategy::ParametersFixing {
            self.write_drift(std::fs::File::create(dir.join(DRIFT_FILE))?)?;
        }
        Ok(())
    }
}

pub(crate) fn write_rows<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut out = csv::Writer::from_path(path)?;
    for r in rows {
        out.serialize(r)?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_aggregate(path: &Path) -> Result<Vec<AggregateRow>> {
    let mut rdr = csv::Reader::from_path(path)?;
    rdr.deserialize()
        .map(|r| r.map_err(Into::into))
        .collect()
}

/// Per-trial row as read back from `trials.csv`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
pub struct TrialRow {
    pub instance_id: String,
    pub n: usize,
    pub depth: usize,
    pub trial: usize,
    pub seed: u64,
    #[serde(with = "float17")]
    pub alpha: f64,
    #[serde(with = "float17")]
    pub f_opt: f64,
    pub c_max: usize,
    pub n_evals: usize,
    pub termination: String,
    pub zero_init: u8,
    pub gammas: String,
    pub betas: String,
}

pub fn read_trials(path: &Path) -> Result<Vec<TrialRow>> {
    let mut rdr = csv::Reader::from_path(path)?;
    rdr.deserialize()
        .map(|r| r.map_err(Into::into))
        .collect()
}
