use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pfqaoa(args: &[&str], cwd: &Path) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_pfqaoa"))
        .args(args)
        .current_dir(cwd)
        .env("PFQAOA_WORKERS", "2")
        .output()
        .unwrap();
    out
}

fn ok(args: &[&str], cwd: &Path) -> String {
    let out = pfqaoa(args, cwd);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn graph_maxcut_solve_landscape() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    ok(
        &["gen-graph", "--kind", "regular", "--n", "6", "--seed", "7", "--out", "g.txt"],
        d,
    );
    let text = fs::read_to_string(d.join("g.txt")).unwrap();
    assert!(text.starts_with("6 9\n"));
    let stdout = ok(&["gen-graph", "--kind", "regular", "--n", "6", "--seed", "7"], d);
    assert_eq!(stdout, text);

    let mc = ok(&["maxcut", "--graph", "g.txt"], d);
    assert!(mc.lines().next().unwrap().starts_with("c_max "));

    let solve = ok(
        &[
            "solve", "--graph", "g.txt", "--strategy", "pf", "--p", "2", "--trials", "3", "--out",
            "solve_out",
        ],
        d,
    );
    assert_eq!(solve.lines().count(), 3);
    let trials = fs::read_to_string(d.join("solve_out/trials.csv")).unwrap();
    assert_eq!(trials.lines().count(), 1 + 3 + 4);
    assert!(trials.lines().nth(1).unwrap().starts_with("g,6,1,0,"));

    let grid = ok(
        &["landscape", "--graph", "g.txt", "--prefix", "0.5,0.25", "--resolution", "5"],
        d,
    );
    assert_eq!(grid.lines().count(), 6);
    assert_eq!(grid.lines().next().unwrap().split(',').count(), 6);

    let bad = pfqaoa(
        &["landscape", "--graph", "g.txt", "--prefix", "0.5", "--resolution", "5"],
        d,
    );
    assert!(!bad.status.success());
    let missing = pfqaoa(&["maxcut", "--graph", "nope.txt"], d);
    assert!(!missing.status.success());
}

#[test]
fn experiment_with_overrides_and_compare() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    fs::write(
        d.join("exp.toml"),
        r#"
node_counts = [6]
instances_per_n = 1
p_max = 4
trials_per_depth = 9
strategy = "both"
master_seed = 1
output_dir = "ignored"

[ensemble]
kind = "regular"
degree = 3
"#,
    )
    .unwrap();
    ok(
        &[
            "experiment", "--config", "exp.toml", "--seed", "4", "--out", "res", "--p-max", "2",
            "--trials", "2",
        ],
        d,
    );
    assert!(!d.join("ignored").exists());
    let manifest = fs::read_to_string(d.join("res/random/manifest.json")).unwrap();
    assert!(manifest.contains("\"master_seed\": 4"));
    let trials = fs::read_to_string(d.join("res/random/trials.csv")).unwrap();
    assert_eq!(trials.lines().count(), 1 + 2 * 2);

    let cmp = ok(
        &[
            "compare", "--a", "res/random", "--b", "res/parameters_fixing", "--out", "cmp",
        ],
        d,
    );
    assert!(cmp.contains("wins="));
    assert!(d.join("cmp/comparison.csv").exists());
}
