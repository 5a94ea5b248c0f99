//! Exact statevector evolution of the QAOA ansatz for Max-Cut.
//!
//! The cost Hamiltonian `1/2 sum_{(j,k)} (I - Z_j Z_k)` is diagonal in the
//! computational basis with the cut value of each basis state on the
//! diagonal, so a cost layer is a pointwise phase `exp(-i gamma c_i)` and
//! matches the full unitary including its identity part. The mixer `exp(-i beta sum_j X_j)` factorises into one
//! single-qubit rotation per qubit.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{cut_value_of_index, Graph};

/// Largest qubit count the simulator will allocate for.
pub const MAX_QUBITS: usize = 24;

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(Error::Capacity {
            what: "qubits",
            value: n,
            limit: MAX_QUBITS,
        });
    }
    Ok(())
}

/// Reduces an angle into `[0, period)`.
pub fn reduce_angle(x: f64, period: f64) -> f64 {
    let r = x.rem_euclid(period);
    // rem_euclid can round up to exactly `period` for tiny negative inputs
    if r >= period {
        0.0
    } else {
        r
    }
}

/// QAOA angles `(gamma_1..gamma_p, beta_1..beta_p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ParameterVector {
    gammas: Vec<f64>,
    betas: Vec<f64>,
}

impl ParameterVector {
    pub fn new(gammas: Vec<f64>, betas: Vec<f64>) -> Result<Self> {
        if gammas.len() != betas.len() {
            return Err(Error::param(format!(
                "{} gammas but {} betas",
                gammas.len(),
                betas.len()
            )));
        }
        Ok(Self { gammas, betas })
    }

    pub fn zeros(p: usize) -> Self {
        Self {
            gammas: vec![0.0; p],
            betas: vec![0.0; p],
        }
    }

    /// Splits a flat `[gammas.., betas..]` slice.
    pub fn from_flat(flat: &[f64]) -> Result<Self> {
        if flat.len() % 2 != 0 {
            return Err(Error::param(format!(
                "flat parameter vector has odd length {}",
                flat.len()
            )));
        }
        let (g, b) = flat.split_at(flat.len() / 2);
        Ok(Self {
            gammas: g.to_vec(),
            betas: b.to_vec(),
        })
    }

    pub fn to_flat(&self) -> Vec<f64> {
        let mut v = self.gammas.clone();
        v.extend_from_slice(&self.betas);
        v
    }

    pub fn depth(&self) -> usize {
        self.gammas.len()
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn betas(&self) -> &[f64] {
        &self.betas
    }

    /// Appends one more layer.
    pub fn extended(&self, gamma: f64, beta: f64) -> Self {
        let mut out = self.clone();
        out.gammas.push(gamma);
        out.betas.push(beta);
        out
    }

    /// Gammas reduced mod 2pi and betas mod pi.
    pub fn canonical(&self) -> Self {
        Self {
            gammas: self.gammas.iter().map(|&g| reduce_angle(g, 2.0 * PI)).collect(),
            betas: self.betas.iter().map(|&b| reduce_angle(b, PI)).collect(),
        }
    }
}

/// Full `2^n` amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// `|+>^n`: every amplitude equal to `2^(-n/2)`.
    pub fn plus(n: usize) -> Result<Self> {
        check_qubits(n)?;
        let dim = 1usize << n;
        // exact 2^(-n/2): power of two, times 1/sqrt(2) for odd n
        let mut a = 0.5f64.powi((n / 2) as i32);
        if n % 2 == 1 {
            a *= std::f64::consts::FRAC_1_SQRT_2;
        }
        Ok(Self {
            n_qubits: n,
            amplitudes: vec![Complex64::new(a, 0.0); dim],
        })
    }

    /// Wraps raw amplitudes; the length must be a power of two.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if !dim.is_power_of_two() || dim < 2 {
            return Err(Error::param(format!(
                "amplitude count {dim} is not a power of two >= 2"
            )));
        }
        let n = dim.trailing_zeros() as usize;
        check_qubits(n)?;
        Ok(Self {
            n_qubits: n,
            amplitudes,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.amplitudes.iter().map(|a| a.norm_sqr()).collect()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Multiplies amplitude `i` by `exp(-i gamma c_i)`.
    pub fn apply_cost_layer(&mut self, spectrum: &CutSpectrum, gamma: f64) {
        assert_eq!(
            self.amplitudes.len(),
            spectrum.values.len(),
            "state and spectrum dimensions differ"
        );
        if gamma == 0.0 {
            return;
        }
        // cut values are small integers: tabulate the phases once
        let phases: Vec<Complex64> = (0..=spectrum.max_value())
            .map(|c| Complex64::from_polar(1.0, -gamma * f64::from(c)))
            .collect();
        for (a, &c) in self.amplitudes.iter_mut().zip(&spectrum.values) {
            *a *= phases[c as usize];
        }
    }

    /// Applies `exp(-i beta X)` to every qubit.
    pub fn apply_mixer_layer(&mut self, beta: f64) {
        if beta == 0.0 {
            return;
        }
        let (s, c) = beta.sin_cos();
        let mis = Complex64::new(0.0, -s);
        let dim = self.amplitudes.len();
        for q in 0..self.n_qubits {
            let stride = 1usize << q;
            for block in (0..dim).step_by(stride << 1) {
                for i in block..block + stride {
                    let a0 = self.amplitudes[i];
                    let a1 = self.amplitudes[i + stride];
                    self.amplitudes[i] = a0 * c + a1 * mis;
                    self.amplitudes[i + stride] = a0 * mis + a1 * c;
                }
            }
        }
    }
}

/// Diagonal of the cost Hamiltonian: entry `i` is the cut value of basis
/// state `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct CutSpectrum {
    n_qubits: usize,
    num_edges: usize,
    values: Vec<u32>,
}

impl CutSpectrum {
    pub fn new(graph: &Graph) -> Result<Self> {
        let n = graph.n();
        check_qubits(n)?;
        let values = (0..1u64 << n)
            .map(|i| cut_value_of_index(graph, i) as u32)
            .collect();
        Ok(Self {
            n_qubits: n,
            num_edges: graph.num_edges(),
            values,
        })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn num_edges(&self) -> usize {
        self.num_edges
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn max_value(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(0)
    }

    /// `sum_i |a_i|^2 c_i`.
    pub fn expectation(&self, state: &StateVector) -> f64 {
        assert_eq!(
            state.amplitudes.len(),
            self.values.len(),
            "state and spectrum dimensions differ"
        );
        state
            .amplitudes
            .iter()
            .zip(&self.values)
            .map(|(a, &c)| a.norm_sqr() * f64::from(c))
            .sum()
    }
}

/// A graph prepared for repeated QAOA evaluation. The spectrum is computed
/// once; every evaluation allocates its own state so the problem can be
/// shared between threads.
#[derive(Debug, Clone)]
pub struct QaoaProblem {
    spectrum: CutSpectrum,
}

impl QaoaProblem {
    pub fn new(graph: &Graph) -> Result<Self> {
        Ok(Self {
            spectrum: CutSpectrum::new(graph)?,
        })
    }

    pub fn spectrum(&self) -> &CutSpectrum {
        &self.spectrum
    }

    pub fn n_qubits(&self) -> usize {
        self.spectrum.n_qubits
    }

    /// Cost layer with `gamma_q`, then mixer with `beta_q`, for `q = 1..p`.
    pub fn evolve(&self, params: &ParameterVector) -> StateVector {
        self.evolve_layers(params.gammas(), params.betas())
    }

    fn evolve_layers(&self, gammas: &[f64], betas: &[f64]) -> StateVector {
        let mut state =
            StateVector::plus(self.spectrum.n_qubits).expect("qubit count checked at construction");
        for (&g, &b) in gammas.iter().zip(betas) {
            state.apply_cost_layer(&self.spectrum, g);
            state.apply_mixer_layer(b);
        }
        state
    }

    /// `F_p(gamma, beta) = <psi|H_C|psi>`.
    pub fn fp(&self, params: &ParameterVector) -> f64 {
        self.spectrum.expectation(&self.evolve(params))
    }

    /// `fp` on a flat `[gammas.., betas..]` slice of even length.
    pub fn fp_flat(&self, flat: &[f64]) -> f64 {
        assert!(flat.len() % 2 == 0, "flat parameter vector has odd length");
        let (g, b) = flat.split_at(flat.len() / 2);
        self.spectrum.expectation(&self.evolve_layers(g, b))
    }
}

/// One-shot `F_p` for a graph. Rebuilds the spectrum on every call; use
/// [`QaoaProblem`] in loops.
pub fn fp(graph: &Graph, params: &ParameterVector) -> Result<f64> {
    Ok(QaoaProblem::new(graph)?.fp(params))
}

pub fn evolve(graph: &Graph, params: &ParameterVector) -> Result<StateVector> {
    Ok(QaoaProblem::new(graph)?.evolve(params))
}
