//! Side-by-side comparison of two reports over identical instances and
//! depths. `delta = mean_alpha(b) - mean_alpha(a)`; with `a` the random
//! baseline and `b` parameters fixing, a positive delta is a win for `b`.
//!
//! `comparison.csv`: `instance_id,n,depth,mean_alpha_a,mean_alpha_b,delta,outcome`.
//! `comparison_summary.csv`: `wins,losses,ties`.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::report::{
    float17, read_aggregate, write_rows, AggregateRow, ExperimentReport, AGGREGATE_FILE,
};

pub const COMPARISON_FILE: &str = "comparison.csv";
pub const SUMMARY_FILE: &str = "comparison_summary.csv";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Win,
    Loss,
    Tie,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub instance_id: String,
    pub n: usize,
    pub depth: usize,
    #[serde(with = "float17")]
    pub mean_alpha_a: f64,
    #[serde(with = "float17")]
    pub mean_alpha_b: f64,
    #[serde(with = "float17")]
    pub delta: f64,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ComparisonSummary {
    pub wins: usize,
    pub losses: usize,
    pub ties: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub rows: Vec<ComparisonRow>,
    pub summary: ComparisonSummary,
}

pub fn compare_strategies(a: &[AggregateRow], b: &[AggregateRow]) -> Result<Comparison> {
    let key = |r: &AggregateRow| (r.instance_id.clone(), r.depth);
    let index_b: BTreeMap<_, _> = b.iter().map(|r| (key(r), r)).collect();
    if index_b.len() != b.len() || a.len() != b.len() {
        return Err(Error::param(format!(
            "reports cover different (instance, depth) sets: {} vs {} rows",
            a.len(),
            b.len()
        )));
    }
    let mut rows = Vec::with_capacity(a.len());
    let mut summary = ComparisonSummary::default();
    for ra in a {
        let rb = index_b.get(&key(ra)).ok_or_else(|| {
            Error::param(format!(
                "instance {} depth {} missing from second report",
                ra.instance_id, ra.depth
            ))
        })?;
        if ra.n != rb.n {
            return Err(Error::param(format!(
                "instance {} has n={} vs n={}",
                ra.instance_id, ra.n, rb.n
            )));
        }
        let delta = rb.mean_alpha - ra.mean_alpha;
        let outcome = if delta > 0.0 {
            summary.wins += 1;
            Outcome::Win
        } else if delta < 0.0 {
            summary.losses += 1;
            Outcome::Loss
        } else {
            summary.ties += 1;
            Outcome::Tie
        };
        rows.push(ComparisonRow {
            instance_id: ra.instance_id.clone(),
            n: ra.n,
            depth: ra.depth,
            mean_alpha_a: ra.mean_alpha,
            mean_alpha_b: rb.mean_alpha,
            delta,
            outcome,
        });
    }
    Ok(Comparison { rows, summary })
}

pub fn compare_reports(a: &ExperimentReport, b: &ExperimentReport) -> Result<Comparison> {
    compare_strategies(&a.aggregate_rows(), &b.aggregate_rows())
}

/// Compares the `aggregate.csv` files of two report directories.
pub fn compare_dirs(a: &Path, b: &Path) -> Result<Comparison> {
    compare_strategies(
        &read_aggregate(&a.join(AGGREGATE_FILE))?,
        &read_aggregate(&b.join(AGGREGATE_FILE))?,
    )
}

pub fn write_comparison(dir: &Path, cmp: &Comparison) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    write_rows(&dir.join(COMPARISON_FILE), &cmp.rows)?;
    write_rows(&dir.join(SUMMARY_FILE), &[cmp.summary])?;
    Ok(())
}
