//! Dense-matrix reference for QAOA evolution. Hamiltonians are assembled
//! from explicit Pauli Kronecker products and exponentiated numerically, so
//! nothing here shares code with the statevector simulator.

#![allow(dead_code)]

use num_complex::Complex64;
use pfqaoa_core::Graph;

pub type Matrix = Vec<Vec<Complex64>>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

pub fn identity(dim: usize) -> Matrix {
    (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { ONE } else { ZERO }).collect())
        .collect()
}

pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    let (ra, rb) = (a.len(), b.len());
    let mut out = vec![vec![ZERO; ra * rb]; ra * rb];
    for i in 0..ra {
        for j in 0..ra {
            for k in 0..rb {
                for l in 0..rb {
                    out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let mut out = vec![vec![ZERO; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == ZERO {
                continue;
            }
            for j in 0..n {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x + y).collect())
        .collect()
}

pub fn scale(a: &Matrix, s: Complex64) -> Matrix {
    a.iter()
        .map(|r| r.iter().map(|x| x * s).collect())
        .collect()
}

pub fn matvec(a: &Matrix, v: &[Complex64]) -> Vec<Complex64> {
    a.iter()
        .map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

fn pauli_x() -> Matrix {
    vec![vec![ZERO, ONE], vec![ONE, ZERO]]
}

fn pauli_z() -> Matrix {
    vec![vec![ONE, ZERO], vec![ZERO, -ONE]]
}

/// `op` on qubit `q` of `n`; qubit 0 is the least significant index bit,
/// so the Kronecker chain runs from qubit `n-1` down to qubit 0.
pub fn on_qubit(op: &Matrix, q: usize, n: usize) -> Matrix {
    let mut out = vec![vec![ONE]];
    for j in (0..n).rev() {
        let factor = if j == q { op.clone() } else { identity(2) };
        out = kron(&out, &factor);
    }
    out
}

/// `1/2 sum_{(j,k)} (I - Z_j Z_k)` including the identity part.
pub fn cost_hamiltonian(g: &Graph) -> Matrix {
    let n = g.n();
    let dim = 1 << n;
    let mut h = vec![vec![ZERO; dim]; dim];
    for &(j, k) in g.edges() {
        let zz = matmul(&on_qubit(&pauli_z(), j, n), &on_qubit(&pauli_z(), k, n));
        let term = add(&identity(dim), &scale(&zz, -ONE));
        h = add(&h, &scale(&term, Complex64::new(0.5, 0.0)));
    }
    h
}

/// `sum_j X_j`.
pub fn mixer_hamiltonian(n: usize) -> Matrix {
    let dim = 1 << n;
    let mut h = vec![vec![ZERO; dim]; dim];
    for j in 0..n {
        h = add(&h, &on_qubit(&pauli_x(), j, n));
    }
    h
}

fn one_norm(a: &Matrix) -> f64 {
    (0..a.len())
        .map(|j| a.iter().map(|r| r[j].norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

/// `exp(a)` by scaling and squaring around a truncated Taylor series.
pub fn expm(a: &Matrix) -> Matrix {
    let norm = one_norm(a);
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as u32
    } else {
        0
    };
    let scaled = scale(a, Complex64::new(0.5f64.powi(squarings as i32), 0.0));
    let dim = a.len();
    let mut result = identity(dim);
    let mut term = identity(dim);
    for k in 1..=30 {
        term = scale(&matmul(&term, &scaled), Complex64::new(1.0 / k as f64, 0.0));
        result = add(&result, &term);
    }
    for _ in 0..squarings {
        result = matmul(&result, &result);
    }
    result
}

/// `exp(-i t h)`.
pub fn unitary(h: &Matrix, t: f64) -> Matrix {
    expm(&scale(h, Complex64::new(0.0, -t)))
}

/// Dense-matrix QAOA state, global phase included.
pub fn dense_evolve(g: &Graph, gammas: &[f64], betas: &[f64]) -> Vec<Complex64> {
    let n = g.n();
    let dim = 1 << n;
    let hc = cost_hamiltonian(g);
    let hb = mixer_hamiltonian(n);
    let amp = Complex64::new((dim as f64).sqrt().recip(), 0.0);
    let mut state = vec![amp; dim];
    for (&gamma, &beta) in gammas.iter().zip(betas) {
        state = matvec(&unitary(&hc, gamma), &state);
        state = matvec(&unitary(&hb, beta), &state);
    }
    state
}

/// `<psi|H_C|psi>` with the dense Hamiltonian.
pub fn dense_expectation(g: &Graph, state: &[Complex64]) -> f64 {
    let hpsi = matvec(&cost_hamiltonian(g), state);
    state
        .iter()
        .zip(&hpsi)
        .map(|(a, b)| (a.conj() * b).re)
        .sum()
}

/// Every simple graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|j| (j + 1..n).map(move |k| (j, k)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            Graph::new(n, edges).unwrap()
        })
        .collect()
}
