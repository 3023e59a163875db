use std::path::PathBuf;
use std::process::{Command, Output};

fn programs() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../programs")
}

fn lab(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_kleisli-lab"));
    c.args(args).current_dir(programs());
    for (k, _) in std::env::vars().filter(|(k, _)| k.starts_with("KLEISLI_LAB_")) {
        c.env_remove(k);
    }
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn ball_csv_has_three_arcs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("traj.csv");
    let o = lab(
        &["run-hyb", "ball.hyb", "--init", "p=5,v=0", "--mode", "event", "--dt", "0.01", "--out", out.to_str().unwrap()],
        &[],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t,p,v"));
    let rows: Vec<Vec<f64>> = lines.map(|l| l.split(',').map(|x| x.parse().unwrap()).collect()).collect();
    assert!(rows.windows(2).all(|w| w[0][0] < w[1][0]));
    // Two interior touchdowns separate the three arcs.
    let t1 = (10.0f64 / 9.8).sqrt();
    let t2 = t1 + 2.0 * (98.0f64.sqrt() / 2.0) / 9.8;
    let t3 = t2 + 2.0 * (98.0f64.sqrt() / 4.0) / 9.8;
    let last = rows.last().unwrap();
    assert!((last[0] - t3).abs() < 1e-6);
    for r in &rows {
        if r[0] <= t1 {
            assert!((r[1] - (5.0 - 4.9 * r[0] * r[0])).abs() < 1e-9);
        }
        assert!(r[1] > -1e-6);
    }
    let dips = rows.windows(3).filter(|w| w[1][1] < w[0][1] && w[1][1] < w[2][1]).count();
    assert_eq!(dips, 2);
}

#[test]
fn stopwatch_json() {
    let o = lab(&["run-hyb", "stopwatch.hyb", "--init", "t=0", "--mode", "flagged", "--dt", "1", "--format", "json"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["trajectories"][0]["duration"], 15.0);
    assert_eq!(v["trajectories"][0]["rows"].as_array().unwrap().len(), 16);
}

#[test]
fn reactor_emits_one_block_per_trajectory() {
    let o = lab(&["run-hyb", "reactor.hyb", "--init", "temp=20", "--mode", "nondet", "--dt", "1"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("index,t,temp\n"));
    assert!(s.contains("0,3.0,23.0") && s.contains("1,3.0,17.0"));
}

#[test]
fn intro_program() {
    let o = lab(&["run-prob", "intro.prob", "--atoms", "intro_atoms.json", "--state", "0"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "from,to,weight\n0,0,7/10\n0,1,3/10\n");
    let o = lab(&["run-prob", "intro.prob", "--atoms", "intro_atoms.json", "--state", "2", "--format", "json"], &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kernel"]["2"]["⊥"], "1");
    // The base fragment has no semantics for 0 or tests.
    let o = lab(&["run-prob", "intro.prob", "--atoms", "intro_atoms.json", "--fragment", "base"], &[]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_maybe_enum() {
    let o = lab(&["verify", "--suite", "maybe-enum", "--max-carrier", "3"], &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("12 families; commutative 2; idempotent 8; both 0"));
}

#[test]
fn verify_pd_impossible_prints_witness() {
    let o = lab(&["verify", "--suite", "pd-impossible"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("witness: η(x) = {δx}"));
    assert!(s.contains("witness: η(x) = ∅"));
}

#[test]
fn verify_json_schema() {
    let o = lab(&["verify", "--suite", "absorption", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    for k in ["suite", "verdict", "counts", "witnesses"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn identical_inputs_identical_bytes() {
    let args = ["verify", "--suite", "ite", "--seed", "3", "--samples", "50", "--json"];
    assert_eq!(lab(&args, &[]).stdout, lab(&args, &[]).stdout);
    let args = ["run-hyb", "ball.hyb", "--init", "p=5,v=0"];
    assert_eq!(lab(&args, &[]).stdout, lab(&args, &[]).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(lab(&["verify", "--suite", "nope"], &[]).status.code(), Some(2));
    assert_eq!(lab(&["run-hyb", "ball.hyb", "--init", "p=5,v=0", "--h", "abc"], &[]).status.code(), Some(2));
    assert_eq!(lab(&["run-hyb", "ball.hyb", "--init", "p=5,v=0", "--mode", "sideways"], &[]).status.code(), Some(2));
    assert_eq!(lab(&["run-hyb", "missing.hyb", "--init", "x=0"], &[]).status.code(), Some(2));
    // `v` is used by the program but not initialised.
    assert_eq!(lab(&["run-hyb", "ball.hyb", "--init", "p=5"], &[]).status.code(), Some(3));
    // A choice outside nondet mode.
    assert_eq!(lab(&["run-hyb", "reactor.hyb", "--init", "temp=0", "--mode", "time"], &[]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.hyb");
    std::fs::write(&bad, "(x' = 1 &").unwrap();
    assert_eq!(lab(&["run-hyb", bad.to_str().unwrap(), "--init", "x=0"], &[]).status.code(), Some(2));
}

#[test]
fn failing_verification_exits_one() {
    // Too small a budget leaves the enumeration incomplete.
    let o = lab(&["enumerate", "--monad", "maybe", "--budget", "3"], &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness:"));
}

#[test]
fn configuration_precedence() {
    let o = lab(&["verify", "--suite", "maybe-enum", "-v"], &[]);
    assert!(stderr(&o).contains("seed = 42,"));
    let o = lab(&["verify", "--suite", "maybe-enum", "-v"], &[("KLEISLI_LAB_SEED", "7")]);
    assert!(stderr(&o).contains("seed = 7,"));
    let o = lab(&["verify", "--suite", "maybe-enum", "-v", "--seed", "9"], &[("KLEISLI_LAB_SEED", "7")]);
    assert!(stderr(&o).contains("seed = 9,"));
    let o = lab(&["run-hyb", "reactor.hyb", "--init", "temp=0", "--mode", "nondet", "-v"], &[]);
    assert!(stderr(&o).contains("h = 1e-3, eps = 1e-9, t_max = 100, dt = 0.01"));
    let o = lab(&["run-hyb", "reactor.hyb", "--init", "temp=0", "--mode", "nondet", "-v", "--eps", "1e-6"], &[]);
    assert!(stderr(&o).contains("h = 1e-3, eps = 1e-6, t_max = 100, dt = 0.01"));
    let o = lab(&["run-hyb", "reactor.hyb", "--init", "temp=0", "-v"], &[("KLEISLI_LAB_MODE", "nondet")]);
    assert_eq!(o.status.code(), Some(0));
    let o = lab(&["run-hyb", "reactor.hyb", "--init", "temp=0"], &[("KLEISLI_LAB_DT", "fast")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn enumerate_and_orbits() {
    let o = lab(&["enumerate", "--monad", "dist", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counts"]["families"], 7);
    let o = lab(&["orbits", "--monad", "dist", "--bound", "4"], &[]);
    assert!(stdout(&o).contains("orbits = 1"));
    assert_eq!(lab(&["orbits", "--monad", "state"], &[]).status.code(), Some(2));
}
