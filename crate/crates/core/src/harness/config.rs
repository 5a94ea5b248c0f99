use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nelder_mead::OptimizerOptions;
use crate::strategies::SweepOptions;

/// Random graph family instances are drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Ensemble {
    Regular { degree: usize },
    ErdosRenyi { prob: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    Random,
    #[serde(alias = "pf")]
    ParametersFixing,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Random => "random",
            Strategy::ParametersFixing => "parameters_fixing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StrategyChoice {
    Random,
    #[serde(alias = "pf")]
    ParametersFixing,
    Both,
}

impl StrategyChoice {
    pub fn strategies(self) -> Vec<Strategy> {
        match self {
            StrategyChoice::Random => vec![Strategy::Random],
            StrategyChoice::ParametersFixing => vec![Strategy::ParametersFixing],
            StrategyChoice::Both => vec![Strategy::Random, Strategy::ParametersFixing],
        }
    }
}

fn default_trials() -> usize {
    20
}

fn default_true() -> bool {
    true
}

fn default_output_dir() -> PathBuf {
    PathBuf::from("results")
}

/// Experiment description, read from a TOML file:
///
/// ```toml
/// node_counts = [6, 8]
/// instances_per_n = 3
/// p_max = 8
/// trials_per_depth = 20          # optional, default 20
/// strategy = "parameters_fixing" # "random" | "parameters_fixing" | "pf" | "both"
/// master_seed = 2024
/// augmented_zero_trial = true    # optional, default true
/// output_dir = "results"         # optional
///
/// [ensemble]
/// kind = "regular"               # or "erdos_renyi" with `prob = 0.5`
/// degree = 3
///
/// [optimizer]                    # optional, defaults shown
/// max_evals = 1000
/// f_abs_tol = 1e-4
/// x_abs_tol = 1e-4
/// initial_step = 0.05
/// ```
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub ensemble: Ensemble,
    pub node_counts: Vec<usize>,
    pub instances_per_n: usize,
    pub p_max: usize,
    #[serde(default = "default_trials")]
    pub trials_per_depth: usize,
    pub strategy: StrategyChoice,
    pub master_seed: u64,
    #[serde(default = "default_true")]
    pub augmented_zero_trial: bool,
    #[serde(default)]
    pub optimizer: OptimizerOptions,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: Self = toml::from_str(text).map_err(|e| Error::param(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)?;
        Self::from_toml(&text).map_err(|e| Error::Parse {
            path: path.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config is always representable as TOML")
    }

    pub fn validate(&self) -> Result<()> {
        if self.node_counts.is_empty() {
            return Err(Error::param("node_counts is empty"));
        }
        if self.instances_per_n == 0 || self.p_max == 0 || self.trials_per_depth == 0 {
            return Err(Error::param(
                "instances_per_n, p_max and trials_per_depth must be positive",
            ));
        }
        for &n in &self.node_counts {
            if n < 2 {
                return Err(Error::param(format!("node count {n} is below 2")));
            }
            if let Ensemble::Regular { degree } = self.ensemble {
                if (n * degree) % 2 != 0 || degree >= n {
                    return Err(Error::param(format!(
                        "no {degree}-regular graph on {n} vertices"
                    )));
                }
            }
        }
        if let Ensemble::ErdosRenyi { prob } = self.ensemble {
            if !(0.0..=1.0).contains(&prob) {
                return Err(Error::param(format!("edge probability {prob} not in [0, 1]")));
            }
        }
        self.optimizer.validate()
    }

    pub fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            trials_per_depth: self.trials_per_depth,
            optimizer: self.optimizer,
            augmented_zero_trial: self.augmented_zero_trial,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
node_counts = [6]
instances_per_n = 2
p_max = 3
strategy = "pf"
master_seed = 9

[ensemble]
kind = "regular"
degree = 3
"#;

    #[test]
    fn defaults_fill_in() {
        let c = ExperimentConfig::from_toml(MINIMAL).unwrap();
        assert_eq!(c.trials_per_depth, 20);
        assert!(c.augmented_zero_trial);
        assert_eq!(c.optimizer, OptimizerOptions::default());
        assert_eq!(c.strategy, StrategyChoice::ParametersFixing);
        assert_eq!(ExperimentConfig::from_toml(&c.to_toml()).unwrap(), c);
    }

    #[test]
    fn rejects_bad_configs() {
        let odd = MINIMAL.replace("[6]", "[5]");
        assert!(ExperimentConfig::from_toml(&odd).is_err());
        let unknown = format!("{MINIMAL}\nbogus = 1\n");
        assert!(ExperimentConfig::from_toml(&unknown).is_err());
        let zero = MINIMAL.replace("p_max = 3", "p_max = 0");
        assert!(ExperimentConfig::from_toml(&zero).is_err());
        let er = MINIMAL.replace("kind = \"regular\"\ndegree = 3", "kind = \"erdos_renyi\"\nprob = 2.0");
        assert!(ExperimentConfig::from_toml(&er).is_err());
    }
}
