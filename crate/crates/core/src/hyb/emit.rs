//! Sampled output of trajectories as CSV or JSON.

use super::sem::{HybRun, Mode};
use crate::error::{Error, Result};
use crate::traj::Traj;
use serde_json::{json, Value};

/// `0, dt, 2dt, …` below the duration, then the duration itself.
pub fn sample_times(duration: f64, dt: f64) -> Vec<f64> {
    let mut ts = vec![];
    let mut k = 0u64;
    loop {
        let t = k as f64 * dt;
        if t >= duration - 1e-12 * duration.max(1.0) {
            break;
        }
        ts.push(t);
        k += 1;
    }
    ts.push(duration);
    ts
}

fn rows(tau: &Traj, dt: f64, flagged: bool) -> Result<Vec<Vec<f64>>> {
    let d = tau.duration();
    sample_times(d, dt)
        .into_iter()
        .map(|t| {
            let mut r = vec![t];
            r.extend(tau.eval(t)?.iter());
            if flagged {
                // ⊤ only at the end of the last evolution
                r.push(if t == d { 1.0 } else { 0.0 });
            }
            Ok(r)
        })
        .collect()
}

fn check_dt(dt: f64) -> Result<()> {
    if dt.is_finite() && dt > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidValue(format!("output step must be positive, got {dt}")))
    }
}

/// Header `[index,]t,<vars>[,flag]`; the index column appears for trajectory
/// sets. Numbers use the shortest representation that reads back exactly.
pub fn emit_csv(run: &HybRun, dt: f64) -> Result<String> {
    check_dt(dt)?;
    let flagged = run.mode == Mode::Flagged;
    let set = run.mode == Mode::Nondet;
    let mut head: Vec<String> = vec![];
    if set {
        head.push("index".into());
    }
    head.push("t".into());
    head.extend(run.vars.iter().cloned());
    if flagged {
        head.push("flag".into());
    }
    let mut out = head.join(",") + "\n";
    for (i, tau) in run.trajs.iter().enumerate() {
        for r in rows(tau, dt, flagged)? {
            let mut cells: Vec<String> = vec![];
            if set {
                cells.push(i.to_string());
            }
            let n = r.len();
            for (j, v) in r.into_iter().enumerate() {
                cells.push(if flagged && j == n - 1 { format!("{}", v as u8) } else { format!("{v:?}") });
            }
            out += &cells.join(",");
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn emit_json(run: &HybRun, dt: f64) -> Result<Value> {
    check_dt(dt)?;
    let trajs = run
        .trajs
        .iter()
        .enumerate()
        .map(|(i, tau)| Ok(json!({ "index": i, "duration": tau.duration(), "rows": rows(tau, dt, run.mode == Mode::Flagged)? })))
        .collect::<Result<Vec<_>>>()?;
    let mut columns = vec!["t".to_string()];
    columns.extend(run.vars.iter().cloned());
    if run.mode == Mode::Flagged {
        columns.push("flag".into());
    }
    Ok(json!({
        "mode": run.mode,
        "columns": columns,
        "trajectories": trajs,
        "events": run.hits,
        "warnings": run.warnings,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyb::{parse_hyb, run_hyb, NumericConfig};

    #[test]
    fn zero_duration_is_one_row() {
        let p = parse_hyb("(x := 2)").unwrap();
        let r = run_hyb(&p, &["x".into()], &[0.0], Mode::Time, &NumericConfig::default()).unwrap();
        let csv = emit_csv(&r, 0.1).unwrap();
        assert_eq!(csv, "t,x\n0.0,2.0\n");
    }

    #[test]
    fn stopwatch_rows() {
        let p = parse_hyb("(t := 0) ; (t' = 1 & t >= 5 && t <= 5) ; (t := 0) ; (t' = 1 & t >= 10 && t <= 10)").unwrap();
        // in event mode the reset is seen along the whole first evolution
        let flat = run_hyb(&p, &["t".into()], &[3.0], Mode::Event, &NumericConfig::default()).unwrap();
        assert_eq!(flat.trajs[0].eval(4.0).unwrap()[0], 0.0);
        let r = run_hyb(&p, &["t".into()], &[3.0], Mode::Flagged, &NumericConfig::default()).unwrap();
        let csv = emit_csv(&r, 1.0).unwrap();
        let lines: Vec<&str> = csv.lines().skip(1).collect();
        assert_eq!(lines.len(), 16);
        let vals: Vec<f64> = lines.iter().map(|l| l.split(',').nth(1).unwrap().parse().unwrap()).collect();
        assert!(csv.starts_with("t,t,flag\n"));
        assert!(lines[15].ends_with(",1") && lines[14].ends_with(",0"));
        let want: Vec<f64> = (0..5).chain(0..=10).map(|v| v as f64).collect();
        assert_eq!(vals, want);
        assert!(emit_csv(&r, 0.0).is_err());
    }
}
