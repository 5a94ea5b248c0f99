mod common;

use std::f64::consts::PI;

use num_complex::Complex64;
use pfqaoa_core::graph::generate_regular;
use pfqaoa_core::{maximize, OptimizerOptions, ParameterVector, QaoaProblem};
use proptest::prelude::*;

use common::*;

#[test]
fn dense_hamiltonians_are_what_they_claim() {
    // H_C diagonal carries the cut values; H_B squared is n I + cross terms
    let g = generate_regular(4, 3, 0).unwrap();
    let hc = cost_hamiltonian(&g);
    let problem = QaoaProblem::new(&g).unwrap();
    for (i, row) in hc.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            let want = if i == j {
                f64::from(problem.spectrum().values()[i])
            } else {
                0.0
            };
            assert!((v - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
    }
    // exp(-i pi X) on one qubit is -I
    let u = unitary(&mixer_hamiltonian(1), PI);
    assert!((u[0][0] + 1.0).norm() < 1e-12 && u[0][1].norm() < 1e-12);
}

#[test]
fn triangle_depth_one_matches_dense() {
    let k3 = pfqaoa_core::Graph::complete(3).unwrap();
    let problem = QaoaProblem::new(&k3).unwrap();
    let params = ParameterVector::new(vec![0.7], vec![0.3]).unwrap();
    let ours = problem.evolve(&params);
    let dense = dense_evolve(&k3, &[0.7], &[0.3]);
    for (a, b) in ours.amplitudes().iter().zip(&dense) {
        assert!((a - b).norm() < 1e-10, "{a} vs {b}");
    }
    assert!((problem.fp(&params) - dense_expectation(&k3, &dense)).abs() < 1e-10);
}

#[test]
fn single_edge_formula_matches_dense() {
    let k2 = pfqaoa_core::Graph::complete(2).unwrap();
    for &(g, b) in &[(PI / 2.0, PI / 8.0), (0.3, 1.1), (4.0, 2.9)] {
        let dense = dense_expectation(&k2, &dense_evolve(&k2, &[g], &[b]));
        let closed = 0.5 * (1.0 + f64::sin(g) * f64::sin(4.0 * b));
        assert!((dense - closed).abs() < 1e-10);
    }
}

#[test]
fn maximize_single_edge() {
    let problem = QaoaProblem::new(&pfqaoa_core::Graph::complete(2).unwrap()).unwrap();
    let r = maximize(|x| problem.fp_flat(x), &[1.0, 0.5], &OptimizerOptions::default()).unwrap();
    assert!(r.f_opt >= 0.99, "{r:?}");
    assert!(r.f_opt <= 1.0 + 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn amplitudes_match_dense_oracle(
        n in 1usize..=4,
        mask in any::<u32>(),
        angles in proptest::collection::vec(-7.0f64..7.0, 6),
        p in 1usize..=3,
    ) {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|j| (j + 1..n).map(move |k| (j, k))).collect();
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        let g = pfqaoa_core::Graph::new(n, edges).unwrap();
        let (gammas, betas) = (&angles[..p], &angles[3..3 + p]);
        let problem = QaoaProblem::new(&g).unwrap();
        let ours = problem.evolve(&ParameterVector::new(gammas.to_vec(), betas.to_vec()).unwrap());
        let dense = dense_evolve(&g, gammas, betas);
        for (a, b) in ours.amplitudes().iter().zip(&dense) {
            prop_assert!((a - b).norm() < 1e-10);
        }
        prop_assert!((ours.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn fp_stays_in_range(
        seed in 0u64..50,
        angles in proptest::collection::vec(-10.0f64..10.0, 4),
    ) {
        let g = generate_regular(6, 3, seed).unwrap();
        let c_max = pfqaoa_core::max_cut_bruteforce(&g).unwrap().c_max as f64;
        let f = QaoaProblem::new(&g).unwrap().fp_flat(&angles);
        prop_assert!(f >= -1e-12 && f <= c_max + 1e-12);
    }
}
