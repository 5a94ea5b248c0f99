//! `F_p` over the last `(gamma_p, beta_p)` pair with earlier angles held
//! fixed. Lattice points are `gamma = 2 pi k / r` and `beta = pi k / r` for
//! `k = 0..r`.
//!
//! CSV layout: a header `gamma\beta,<beta_0>,...,<beta_{r-1}>`, then one
//! row per gamma starting with the gamma value.

use std::f64::consts::PI;
use std::io::Write;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::harness::report::fmt_f64;
use crate::sim::{ParameterVector, QaoaProblem};

#[derive(Debug, Clone, PartialEq)]
pub struct LandscapeGrid {
    pub prefix: ParameterVector,
    pub gammas: Vec<f64>,
    pub betas: Vec<f64>,
    /// `values[i][j] = F_p(prefix, gammas[i], betas[j])`.
    pub values: Vec<Vec<f64>>,
}

impl LandscapeGrid {
    /// Depth of the evaluated circuit (prefix depth + 1).
    pub fn depth(&self) -> usize {
        self.prefix.depth() + 1
    }

    pub fn resolution(&self) -> usize {
        self.gammas.len()
    }

    pub fn mean(&self) -> f64 {
        let n = (self.gammas.len() * self.betas.len()) as f64;
        self.values.iter().flatten().sum::<f64>() / n
    }

    pub fn min(&self) -> f64 {
        self.values.iter().flatten().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max(&self) -> f64 {
        self.values
            .iter()
            .flatten()
            .copied()
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn write_csv(&self, w: impl Write) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let mut header = vec!["gamma\\beta".to_string()];
        header.extend(self.betas.iter().map(|&b| fmt_f64(b)));
        out.write_record(&header)?;
        for (g, row) in self.gammas.iter().zip(&self.values) {
            let mut rec = vec![fmt_f64(*g)];
            rec.extend(row.iter().map(|&v| fmt_f64(v)));
            out.write_record(&rec)?;
        }
        out.flush()?;
        Ok(())
    }
}

pub fn landscape_grid(
    problem: &QaoaProblem,
    prefix: &ParameterVector,
    resolution: usize,
) -> Result<LandscapeGrid> {
    if resolution < 2 {
        return Err(Error::param(format!(
            "landscape resolution must be at least 2, got {resolution}"
        )));
    }
    let r = resolution as f64;
    let gammas: Vec<f64> = (0..resolution).map(|k| 2.0 * PI * k as f64 / r).collect();
    let betas: Vec<f64> = (0..resolution).map(|k| PI * k as f64 / r).collect();
    let values = gammas
        .par_iter()
        .map(|&g| {
            betas
                .iter()
                .map(|&b| problem.fp(&prefix.extended(g, b)))
                .collect()
        })
        .collect();
    Ok(LandscapeGrid {
        prefix: prefix.clone(),
        gammas,
        betas,
        values,
    })
}
