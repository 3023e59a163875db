//! The acceptance criteria, one line each. Runs without the libtest harness so
//! the lines are always printed; exits non-zero if any criterion fails.

use kleisli_core::hyb::{parse_hyb, run_hyb, Mode, NumericConfig};
use kleisli_core::suites::{self, SuiteOptions};
use kleisli_core::{Result, SuiteReport};
use serde_json::json;
use std::time::{Duration, Instant};

struct Outcome {
    ok: bool,
    detail: String,
}

fn from_reports(reports: &[SuiteReport]) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.to_string()).collect();
    Outcome { ok: failed.is_empty(), detail: failed.join("\n") }
}

fn criterion(n: usize, name: &str, limit: Duration, body: impl FnOnce() -> Result<Outcome>) -> bool {
    let start = Instant::now();
    let out = body();
    let took = start.elapsed();
    let (ok, detail) = match out {
        Ok(o) => (o.ok && took <= limit, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    let slow = if took > limit { format!(" (limit {:.0} s exceeded)", limit.as_secs_f64()) } else { String::new() };
    println!("criterion {n:>2} {}: {name} [{:.2} s]{slow}", if ok { "PASS" } else { "FAIL" }, took.as_secs_f64());
    if !ok && !detail.is_empty() {
        for line in detail.lines() {
            println!("    {line}");
        }
    }
    ok
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn bouncing_ball() -> Result<Outcome> {
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../programs/ball.hyb")).expect("ball.hyb");
    let prog = parse_hyb(&src)?;
    let cfg = NumericConfig { eps: 1e-9, ..Default::default() };
    let r = run_hyb(&prog, &["p".into(), "v".into()], &[0.0, 0.0], Mode::Event, &cfg)?;
    let g = 9.8f64;
    let v0 = (2.0 * g * 5.0).sqrt();
    let speeds = [v0, v0 / 2.0, v0 / 4.0];
    let t1 = (10.0 / g).sqrt();
    let times = [t1, t1 + 2.0 * speeds[1] / g, t1 + 2.0 * speeds[1] / g + 2.0 * speeds[2] / g];
    let mut bad = vec![];
    if r.hits.len() != 3 {
        bad.push(format!("{} hits", r.hits.len()));
    }
    for (i, h) in r.hits.iter().enumerate().take(3) {
        if (h.time - times[i]).abs() > 1e-6 {
            bad.push(format!("bounce {i}: t = {} vs {}", h.time, times[i]));
        }
        if (h.state[1].abs() - speeds[i]).abs() > 1e-6 {
            bad.push(format!("bounce {i}: speed {} vs {}", h.state[1].abs(), speeds[i]));
        }
    }
    let d = r.trajs[0].duration();
    if (d - times[2]).abs() > 1e-6 {
        bad.push(format!("duration {d} vs {}", times[2]));
    }
    Ok(Outcome { ok: bad.is_empty(), detail: bad.join("\n") })
}

fn stopwatch() -> Result<Outcome> {
    let src = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../programs/stopwatch.hyb")).expect("stopwatch.hyb");
    let prog = parse_hyb(&src)?;
    let r = run_hyb(&prog, &["t".into()], &[0.0], Mode::Flagged, &NumericConfig::default())?;
    let tau = &r.trajs[0];
    let seen = json!({
        "duration": tau.duration(),
        "left5": tau.eval_left(5.0)?[0],
        "at5": tau.eval(5.0)?[0],
        "at15": tau.eval(15.0)?[0],
    });
    let want = json!({ "duration": 15.0, "left5": 5.0, "at5": 0.0, "at15": 10.0 });
    Ok(Outcome { ok: seen == want, detail: format!("got {seen}") })
}

fn main() {
    let o = SuiteOptions::default();
    let run = |name: &str| suites::run_suite(name, &o);
    let results = [
        criterion(1, "Maybe classification: 12 families, 2 commutative, 8 idempotent, 0 both, 3 with ⊥ as unit", secs(10), || {
            Ok(from_reports(&[run("maybe-enum")?]))
        }),
        criterion(2, "powerset classification: 16 families in bijection with shrink maps", secs(60), || {
            Ok(from_reports(&[run("powerset-enum")?]))
        }),
        criterion(3, "rational distributions: every family is a convex combination, λ = 1/2 the commutative one", secs(120), || {
            Ok(from_reports(&[run("dist-enum")?]))
        }),
        criterion(4, "monad laws and distributive laws, with the full powerset counterexample", secs(300), || {
            let hq = run("hq")?;
            let mut out = from_reports(&[run("monad-laws")?, run("dist-law")?, hq.clone()]);
            if !hq.counts.contains_key("full.failing_law") {
                out.ok = false;
                out.detail += "\nno full powerset counterexample";
            }
            Ok(out)
        }),
        criterion(5, "P∘D: two unit families, empty constraint intersection for both", secs(30), || {
            let r = run("pd-impossible")?;
            let mut out = from_reports(std::slice::from_ref(&r));
            let units = r.counts.get("unit_families").cloned();
            let empty = r.counts.iter().filter(|(k, v)| k.starts_with("intersection[") && **v == json!(0)).count();
            if units != Some(json!(2)) || empty != 2 {
                out.ok = false;
                out.detail += &format!("\nunits {units:?}, empty intersections {empty}");
            }
            Ok(out)
        }),
        criterion(6, "absorption: 0;p = 0 everywhere, p;0 = 0 in D∘Maybe only", secs(30), || {
            Ok(from_reports(&[run("absorption")?]))
        }),
        criterion(7, "if-then-else: four equations on |X| ≤ 3 and 1000 instances at |X| = 4, policies agree", secs(60), || {
            Ok(from_reports(&[run("ite")?]))
        }),
        criterion(8, "the seven convex semiring axioms, with the nesting weights 2/3, 3/4", secs(60), || {
            let r = run("convex")?;
            let mut out = from_reports(std::slice::from_ref(&r));
            if r.counts.get("nesting.weights(1/2,1/2)") != Some(&json!("2/3, 3/4")) {
                out.ok = false;
                out.detail += "\nnesting weights differ";
            }
            Ok(out)
        }),
        criterion(9, "bouncing ball: bounce times and impact speeds within 1e-6", secs(5), bouncing_ball),
        criterion(10, "stopwatch: duration 15, 5 at 5⁻, 0 at 5, 10 at 15", secs(1), stopwatch),
        criterion(11, "parity abstraction commutes with every composite of depth ≤ 3", secs(30), || {
            Ok(from_reports(&[run("abstraction")?]))
        }),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
