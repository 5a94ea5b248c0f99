//! Nelder-Mead downhill simplex with the standard coefficients
//! (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
//!
//! Iteration order and accept/reject tests follow the classic formulation
//! used by SciPy's `minimize(method="Nelder-Mead")`. The initial simplex is
//! `x0` plus one vertex per coordinate offset by an absolute step.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct OptimizerOptions {
    pub max_evals: usize,
    pub f_abs_tol: f64,
    pub x_abs_tol: f64,
    /// Offset of each initial simplex vertex from `x0`, in radians.
    pub initial_step: f64,
}

impl Default for OptimizerOptions {
    fn default() -> Self {
        Self {
            max_evals: 1000,
            f_abs_tol: 1e-4,
            x_abs_tol: 1e-4,
            initial_step: 0.05,
        }
    }
}

impl OptimizerOptions {
    pub fn validate(&self) -> Result<()> {
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if self.max_evals == 0
            || !positive(self.f_abs_tol)
            || !positive(self.x_abs_tol)
            || !positive(self.initial_step)
        {
            return Err(Error::param(format!(
                "optimizer options must be strictly positive: {self:?}"
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Termination {
    Converged,
    EvalBudgetExhausted,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::Converged => "converged",
            Termination::EvalBudgetExhausted => "eval_budget_exhausted",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OptimizationResult {
    pub x_opt: Vec<f64>,
    pub f_opt: f64,
    pub n_evals: usize,
    pub termination: Termination,
    /// Best objective value after the initial simplex and after each
    /// iteration (non-increasing for `minimize`, non-decreasing for
    /// `maximize`).
    pub best_history: Vec<f64>,
}

struct BudgetExhausted;

/// Counts evaluations, enforces the budget and remembers the best point
/// ever evaluated.
struct Evaluator<F> {
    f: F,
    n_evals: usize,
    max_evals: usize,
    best: Option<(Vec<f64>, f64)>,
}

impl<F: FnMut(&[f64]) -> f64> Evaluator<F> {
    fn eval(&mut self, x: &[f64]) -> Result<std::result::Result<f64, BudgetExhausted>> {
        if self.n_evals >= self.max_evals {
            return Ok(Err(BudgetExhausted));
        }
        self.n_evals += 1;
        let v = (self.f)(x);
        if !v.is_finite() {
            return Err(Error::NonFinite {
                x: x.to_vec(),
                value: v,
            });
        }
        if self.best.as_ref().is_none_or(|(_, b)| v < *b) {
            self.best = Some((x.to_vec(), v));
        }
        Ok(Ok(v))
    }
}

/// Minimises `objective` starting from `x0`.
pub fn minimize<F>(objective: F, x0: &[f64], options: &OptimizerOptions) -> Result<OptimizationResult>
where
    F: FnMut(&[f64]) -> f64,
{
    options.validate()?;
    let d = x0.len();
    if d == 0 {
        return Err(Error::param("cannot optimise over zero dimensions"));
    }
    let mut ev = Evaluator {
        f: objective,
        n_evals: 0,
        max_evals: options.max_evals,
        best: None,
    };
    let mut history = Vec::new();
    let termination = run(&mut ev, x0, options, &mut history)?;
    let (x_opt, f_opt) = ev.best.expect("at least one evaluation happens");
    Ok(OptimizationResult {
        x_opt,
        f_opt,
        n_evals: ev.n_evals,
        termination,
        best_history: history,
    })
}

/// Maximises `objective` by minimising its negation.
pub fn maximize<F>(
    mut objective: F,
    x0: &[f64],
    options: &OptimizerOptions,
) -> Result<OptimizationResult>
where
    F: FnMut(&[f64]) -> f64,
{
    let mut res = minimize(|x| -objective(x), x0, options).map_err(|e| match e {
        Error::NonFinite { x, value } => Error::NonFinite { x, value: -value },
        other => other,
    })?;
    res.f_opt = -res.f_opt;
    for v in &mut res.best_history {
        *v = -*v;
    }
    Ok(res)
}

macro_rules! eval_or_stop {
    ($ev:expr, $x:expr) => {
        match $ev.eval($x)? {
            Ok(v) => v,
            Err(BudgetExhausted) => return Ok(Termination::EvalBudgetExhausted),
        }
    };
}

fn run<F: FnMut(&[f64]) -> f64>(
    ev: &mut Evaluator<F>,
    x0: &[f64],
    options: &OptimizerOptions,
    history: &mut Vec<f64>,
) -> Result<Termination> {
    let d = x0.len();
    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(d + 1);
    let mut fvals: Vec<f64> = Vec::with_capacity(d + 1);

    simplex.push(x0.to_vec());
    for k in 0..d {
        let mut v = x0.to_vec();
        v[k] += options.initial_step;
        simplex.push(v);
    }
    for v in &simplex {
        fvals.push(eval_or_stop!(ev, v));
    }

    loop {
        sort_simplex(&mut simplex, &mut fvals);
        history.push(fvals[0]);

        let f_spread = fvals[d] - fvals[0];
        let x_spread = simplex[1..]
            .iter()
            .flat_map(|v| v.iter().zip(&simplex[0]).map(|(a, b)| (a - b).abs()))
            .fold(0.0, f64::max);
        if f_spread < options.f_abs_tol && x_spread < options.x_abs_tol {
            return Ok(Termination::Converged);
        }

        let mut centroid = vec![0.0; d];
        for v in &simplex[..d] {
            for (c, x) in centroid.iter_mut().zip(v) {
                *c += x;
            }
        }
        for c in &mut centroid {
            *c /= d as f64;
        }
        let worst = simplex[d].clone();
        // centroid + t * (centroid - worst)
        let along = |t: f64| -> Vec<f64> {
            centroid
                .iter()
                .zip(&worst)
                .map(|(c, w)| c + t * (c - w))
                .collect()
        };

        let xr = along(REFLECT);
        let fr = eval_or_stop!(ev, &xr);

        if fr < fvals[0] {
            let xe = along(REFLECT * EXPAND);
            let fe = eval_or_stop!(ev, &xe);
            if fe < fr {
                (simplex[d], fvals[d]) = (xe, fe);
            } else {
                (simplex[d], fvals[d]) = (xr, fr);
            }
            continue;
        }
        if fr < fvals[d - 1] {
            (simplex[d], fvals[d]) = (xr, fr);
            continue;
        }

        let accepted = if fr < fvals[d] {
            let xc = along(REFLECT * CONTRACT);
            let fc = eval_or_stop!(ev, &xc);
            (fc <= fr).then_some((xc, fc))
        } else {
            let xcc = along(-CONTRACT);
            let fcc = eval_or_stop!(ev, &xcc);
            (fcc < fvals[d]).then_some((xcc, fcc))
        };
        match accepted {
            Some((x, f)) => (simplex[d], fvals[d]) = (x, f),
            None => {
                let best = simplex[0].clone();
                for j in 1..=d {
                    for (x, b) in simplex[j].iter_mut().zip(&best) {
                        *x = b + SHRINK * (*x - b);
                    }
                    fvals[j] = eval_or_stop!(ev, &simplex[j]);
                }
            }
        }
    }
}

/// Stable sort by objective value so ties keep vertex order.
fn sort_simplex(simplex: &mut Vec<Vec<f64>>, fvals: &mut Vec<f64>) {
    let mut order: Vec<usize> = (0..fvals.len()).collect();
    order.sort_by(|&a, &b| fvals[a].total_cmp(&fvals[b]));
    *simplex = order.iter().map(|&i| std::mem::take(&mut simplex[i])).collect();
    *fvals = order.iter().map(|&i| fvals[i]).collect();
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn opts() -> OptimizerOptions {
        OptimizerOptions::default()
    }

    #[test]
    fn quadratic_1d() {
        let r = minimize(|x| (x[0] - 2.0).powi(2), &[0.0], &opts()).unwrap();
        assert!((r.x_opt[0] - 2.0).abs() < 1e-3, "{r:?}");
        assert_eq!(r.termination, Termination::Converged);
    }

    #[test]
    fn rosenbrock_2d() {
        let rosen = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let o = OptimizerOptions {
            f_abs_tol: 1e-8,
            x_abs_tol: 1e-8,
            ..opts()
        };
        let r = minimize(rosen, &[-1.2, 1.0], &o).unwrap();
        assert!(r.f_opt < 1e-3, "{r:?}");
        assert!((r.x_opt[0] - 1.0).abs() < 0.05 && (r.x_opt[1] - 1.0).abs() < 0.1);
        assert!(r.n_evals <= 1000);
    }

    #[test]
    fn sphere_4d() {
        let r = minimize(|x| x.iter().map(|v| v * v).sum(), &[1.0; 4], &opts()).unwrap();
        let norm = r.x_opt.iter().map(|v| v * v).sum::<f64>().sqrt();
        assert!(norm < 1e-2, "{r:?}");
    }

    #[test]
    fn maximize_concave() {
        let r = maximize(|x| -(x[0] - 1.0).powi(2), &[0.0], &opts()).unwrap();
        assert!((r.x_opt[0] - 1.0).abs() < 1e-2);
        assert!(r.f_opt.abs() < 1e-4);
        assert!(r.f_opt <= 0.0);
    }

    #[test]
    fn constant_objective_converges_near_start() {
        let x0 = [0.3, -0.2];
        let r = minimize(|_| 7.5, &x0, &opts()).unwrap();
        assert_eq!(r.termination, Termination::Converged);
        assert_eq!(r.f_opt, 7.5);
        for (a, b) in r.x_opt.iter().zip(&x0) {
            assert!((a - b).abs() <= opts().initial_step);
        }
        assert!(r.n_evals < 100, "{}", r.n_evals);
    }

    #[test]
    fn budget_is_respected() {
        let o = OptimizerOptions {
            max_evals: 37,
            f_abs_tol: 1e-14,
            x_abs_tol: 1e-14,
            ..opts()
        };
        let rosen = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let r = minimize(rosen, &[-1.2, 1.0], &o).unwrap();
        assert_eq!(r.n_evals, 37);
        assert_eq!(r.termination, Termination::EvalBudgetExhausted);
        assert_eq!(r.f_opt, rosen(&r.x_opt));
    }

    #[test]
    fn errors() {
        assert!(matches!(
            minimize(|_| 0.0, &[], &opts()),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            minimize(|x| if x[0] > 0.01 { f64::NAN } else { x[0] }, &[0.0], &opts()),
            Err(Error::NonFinite { .. })
        ));
        let bad = OptimizerOptions {
            f_abs_tol: 0.0,
            ..opts()
        };
        assert!(minimize(|x| x[0], &[0.0], &bad).is_err());
    }

    proptest! {
        #[test]
        fn best_is_monotone_and_deterministic(
            x0 in proptest::collection::vec(-3.0f64..3.0, 1..5),
            shift in -2.0f64..2.0,
            max_evals in 5usize..300,
        ) {
            let f = |x: &[f64]| x.iter().enumerate()
                .map(|(i, v)| (v - shift).powi(2) * (i + 1) as f64 + (3.0 * v).sin())
                .sum::<f64>();
            let o = OptimizerOptions { max_evals, ..OptimizerOptions::default() };
            let a = minimize(f, &x0, &o).unwrap();
            let b = minimize(f, &x0, &o).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert!(a.n_evals <= max_evals);
            prop_assert!(a.best_history.windows(2).all(|w| w[1] <= w[0]));
            prop_assert_eq!(a.f_opt, f(&a.x_opt));
            prop_assert!(a.f_opt <= f(&x0));
        }
    }
}
