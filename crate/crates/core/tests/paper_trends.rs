//! Qualitative depth trends of the two strategies on small 3-regular
//! instances.

use std::f64::consts::PI;

use pfqaoa_core::strategies::AngleKind;
use pfqaoa_core::{
    drift_tracks, generate_regular, parameters_fixing_sweep, random_init_sweep, Instance,
    SweepOptions,
};

fn instance(n: usize, seed: u64) -> Instance {
    Instance::new(generate_regular(n, 3, seed).unwrap()).unwrap()
}

/// Shortest signed distance between two angles on a circle of `period`.
fn circular_diff(a: f64, b: f64, period: f64) -> f64 {
    let d = (a - b).rem_euclid(period);
    d.min(period - d)
}

#[test]
fn random_init_mean_stalls_at_larger_depth() {
    let opts = SweepOptions::default();
    let mut stalled = Vec::new();
    for seed in 0..3 {
        let recs = random_init_sweep(&instance(8, seed), 6, 40 + seed, &opts).unwrap();
        let means: Vec<f64> = recs.iter().map(|r| r.mean_alpha).collect();
        println!("random n=8 seed={seed}: {means:.4?}");
        // flattens (gain under 0.01) or dips somewhere from p=4 on
        stalled.push((3..6).any(|i| means[i] - means[i - 1] < 0.01));
    }
    assert!(stalled.iter().any(|&s| s), "{stalled:?}");
}

#[test]
fn parameters_fixing_climbs_on_six_nodes() {
    let opts = SweepOptions::default();
    for seed in [0u64, 2] {
        let recs = parameters_fixing_sweep(&instance(6, seed), 8, 70 + seed, &opts).unwrap();
        let means: Vec<f64> = recs.iter().map(|r| r.mean_alpha).collect();
        println!("pf n=6 seed={seed}: {means:.4?}");
        for w in means.windows(2) {
            assert!(w[1] >= w[0] - 0.02, "{means:?}");
        }
        assert!(means[6] > 0.95, "{means:?}");
    }
}

#[test]
fn parameters_move_most_when_introduced() {
    let opts = SweepOptions::default();
    let recs = parameters_fixing_sweep(&instance(8, 1), 8, 5, &opts).unwrap();
    let mut first = Vec::new();
    let mut later = Vec::new();
    for t in drift_tracks(&recs) {
        let period = match t.kind {
            AngleKind::Gamma => 2.0 * PI,
            AngleKind::Beta => PI,
        };
        let steps: Vec<f64> = t
            .values
            .windows(2)
            .map(|w| circular_diff(w[1].1, w[0].1, period))
            .collect();
        if let Some((head, tail)) = steps.split_first() {
            first.push(*head);
            later.extend_from_slice(tail);
        }
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    println!(
        "first-step drift {:.4}, later drift {:.4}",
        mean(&first),
        mean(&later)
    );
    assert!(mean(&first) > mean(&later));
}
