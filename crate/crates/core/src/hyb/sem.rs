//! Semantics: atoms become Kleisli arrows `ℝⁿ → H ℝⁿ` and programs are
//! interpreted by Kleisli composition.

use super::ast::{AffineTerm, CmpOp, HybAtom, HybPred, HybProg, Trigger};
use crate::error::{Error, Result};
use crate::expm::AffineFlow;
use crate::traj::{hyb_bind, AffineMap, HybKernel, State, Traj};
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::sync::Arc;

/// Numerical knobs for event detection and output sampling (seconds).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumericConfig {
    /// Scan step.
    pub h: f64,
    /// Bisection tolerance.
    pub eps: f64,
    /// Event horizon.
    pub t_max: f64,
    /// Output step.
    pub dt: f64,
}

impl Default for NumericConfig {
    fn default() -> Self {
        NumericConfig { h: 1e-3, eps: 1e-9, t_max: 100.0, dt: 0.01 }
    }
}

impl NumericConfig {
    pub fn validate(&self) -> Result<()> {
        let all = [self.h, self.eps, self.t_max, self.dt];
        if all.iter().any(|x| !x.is_finite() || *x <= 0.0) {
            return Err(Error::InvalidValue(format!("numeric settings must be positive: {self:?}")));
        }
        if self.eps > self.h {
            return Err(Error::InvalidValue(format!("ε = {} exceeds the scan step h = {}", self.eps, self.h)));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Flows run for a given duration.
    Time,
    /// Flows run until a predicate first holds.
    Event,
    /// Event semantics over `ℝⁿ × 2`; assignments act at the end of an evolution.
    Flagged,
    /// Choice over `Q∘H`.
    Nondet,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "time" => Ok(Mode::Time),
            "event" => Ok(Mode::Event),
            "flagged" => Ok(Mode::Flagged),
            "nondet" => Ok(Mode::Nondet),
            _ => Err(Error::InvalidValue(format!("unknown mode `{s}` (time, event, flagged, nondet)"))),
        }
    }
}

/// `lhs ≤ rhs` with both sides affine in the state.
#[derive(Clone, Debug, PartialEq)]
pub struct LinIneq {
    pub lhs: (DVector<f64>, f64),
    pub rhs: (DVector<f64>, f64),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Pred {
    Le(LinIneq),
    And(Box<Pred>, Box<Pred>),
    Or(Box<Pred>, Box<Pred>),
}

impl Pred {
    pub fn holds(&self, x: &State) -> bool {
        match self {
            Pred::Le(i) => i.lhs.0.dot(x) + i.lhs.1 <= i.rhs.0.dot(x) + i.rhs.1,
            Pred::And(a, b) => a.holds(x) && b.holds(x),
            Pred::Or(a, b) => a.holds(x) || b.holds(x),
        }
    }
}

#[derive(Clone, Debug)]
pub enum CTrigger {
    Duration(f64),
    Event(Pred),
}

#[derive(Clone, Debug)]
pub enum CProg {
    Assign(AffineMap),
    Flow(Arc<AffineFlow>, CTrigger),
    Skip,
    Seq(Box<CProg>, Box<CProg>),
    Choice(Box<CProg>, Box<CProg>),
}

fn index(vars: &[String], v: &str) -> Result<usize> {
    vars.iter().position(|w| w == v).ok_or_else(|| Error::UnknownVariable(v.into()))
}

fn row(vars: &[String], t: &AffineTerm) -> Result<(DVector<f64>, f64)> {
    let mut a = DVector::zeros(vars.len());
    for (v, c) in &t.coeffs {
        a[index(vars, v)?] += c;
    }
    Ok((a, t.constant))
}

/// Rows of `M, c` for a total tuple `xᵢ := tᵢ`.
fn tuple(vars: &[String], eqs: &[(String, AffineTerm)]) -> Result<(DMatrix<f64>, DVector<f64>)> {
    let n = vars.len();
    let (mut m, mut c) = (DMatrix::zeros(n, n), DVector::zeros(n));
    let mut seen = vec![false; n];
    for (v, t) in eqs {
        let i = index(vars, v)?;
        if seen[i] {
            return Err(Error::DuplicateVariable(v.clone()));
        }
        seen[i] = true;
        let (a, k) = row(vars, t)?;
        m.set_row(i, &a.transpose());
        c[i] = k;
    }
    if let Some(i) = seen.iter().position(|s| !s) {
        return Err(Error::OmittedVariable(vars[i].clone()));
    }
    Ok((m, c))
}

fn pred(vars: &[String], p: &HybPred) -> Result<Pred> {
    Ok(match p {
        HybPred::Cmp(l, op, r) => {
            let (l, r) = (row(vars, l)?, row(vars, r)?);
            match op {
                CmpOp::Le => Pred::Le(LinIneq { lhs: l, rhs: r }),
                CmpOp::Ge => Pred::Le(LinIneq { lhs: r, rhs: l }),
            }
        }
        HybPred::And(a, b) => Pred::And(Box::new(pred(vars, a)?), Box::new(pred(vars, b)?)),
        HybPred::Or(a, b) => Pred::Or(Box::new(pred(vars, a)?), Box::new(pred(vars, b)?)),
    })
}

/// Resolves names against `vars` and checks that atoms fit `mode`.
pub fn compile(p: &HybProg, vars: &[String], mode: Mode) -> Result<CProg> {
    Ok(match p {
        HybProg::Skip => CProg::Skip,
        HybProg::Seq(a, b) => CProg::Seq(Box::new(compile(a, vars, mode)?), Box::new(compile(b, vars, mode)?)),
        HybProg::Choice(a, b) => {
            if mode != Mode::Nondet {
                return Err(Error::Mode("choice needs nondet mode".into()));
            }
            CProg::Choice(Box::new(compile(a, vars, mode)?), Box::new(compile(b, vars, mode)?))
        }
        HybProg::Atom(HybAtom::Assign(eqs)) => {
            let (m, c) = tuple(vars, eqs)?;
            CProg::Assign(AffineMap { m, c })
        }
        HybProg::Atom(HybAtom::Flow(eqs, trig)) => {
            let (a, b) = tuple(vars, eqs)?;
            let flow = Arc::new(AffineFlow::new(a, b)?);
            let trig = match (trig, mode) {
                (Trigger::Duration(_), Mode::Event) => {
                    return Err(Error::Mode("a duration-triggered flow in event mode".into()))
                }
                (Trigger::Event(_), Mode::Time) => return Err(Error::Mode("an event-triggered flow in time mode".into())),
                (Trigger::Duration(d), _) => CTrigger::Duration(*d),
                (Trigger::Event(psi), _) => CTrigger::Event(pred(vars, psi)?),
            };
            CProg::Flow(flow, trig)
        }
    })
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum HitResult {
    Time(f64),
    NoHitWithinHorizon,
}

/// First time the flow from `x0` enters `ψ`: scan on the `h` grid up to
/// `T_max`, then bisect the bracketing step down to width `ε`. The returned
/// time is the satisfying end of the final bracket.
pub fn hit_time(flow: &AffineFlow, psi: &Pred, cfg: &NumericConfig, x0: &State) -> HitResult {
    if psi.holds(x0) {
        return HitResult::Time(0.0);
    }
    let holds = |t: f64| psi.holds(&flow.eval(x0, t));
    let steps = (cfg.t_max / cfg.h + 1e-9).floor() as u64;
    let mut prev = 0.0;
    for k in 1..=steps {
        let t = k as f64 * cfg.h;
        if holds(t) {
            let (mut lo, mut hi) = (prev, t);
            while hi - lo > cfg.eps {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                if holds(mid) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            return HitResult::Time(hi);
        }
        prev = t;
    }
    HitResult::NoHitWithinHorizon
}

/// An event observed during a run.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Hit {
    /// Absolute time of the event along the run.
    pub time: f64,
    pub state: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct HybRun {
    pub vars: Vec<String>,
    pub mode: Mode,
    /// One trajectory, or the trajectory set in nondet mode.
    pub trajs: Vec<Traj>,
    pub hits: Vec<Hit>,
    pub warnings: Vec<String>,
}

struct Ctx<'a> {
    cfg: &'a NumericConfig,
    clock: RefCell<f64>,
    hits: RefCell<Vec<Hit>>,
    warnings: RefCell<Vec<String>>,
}

impl Ctx<'_> {
    fn atom_traj(&self, flow: &Arc<AffineFlow>, trig: &CTrigger, x: &State) -> Result<Traj> {
        let d = match trig {
            CTrigger::Duration(d) => *d,
            CTrigger::Event(psi) => match hit_time(flow, psi, self.cfg, x) {
                HitResult::Time(d) => {
                    let t = *self.clock.borrow() + d;
                    self.hits.borrow_mut().push(Hit { time: t, state: flow.eval(x, d).iter().copied().collect() });
                    d
                }
                HitResult::NoHitWithinHorizon => {
                    self.warnings.borrow_mut().push(format!(
                        "no event within {} s from t = {}; the flow takes duration 0",
                        self.cfg.t_max,
                        self.clock.borrow()
                    ));
                    0.0
                }
            },
        };
        *self.clock.borrow_mut() += d;
        let tau = Traj::flow(flow.clone(), x.clone(), d)?;
        if tau.end().iter().any(|v| !v.is_finite()) {
            return Err(Error::Numeric("the flow left the finite range".into()));
        }
        Ok(tau)
    }
}

/// A compiled program viewed as a Kleisli arrow.
struct Sem<'a> {
    p: &'a CProg,
    ctx: &'a Ctx<'a>,
    n: usize,
}

/// `θ ∘ ⟦p⟧`, which is affine for every choice-free program.
fn start_map(p: &CProg, n: usize) -> AffineMap {
    match p {
        CProg::Assign(m) => m.clone(),
        CProg::Flow(..) | CProg::Skip => AffineMap::identity(n),
        CProg::Seq(a, b) => start_map(b, n).after(&start_map(a, n)),
        CProg::Choice(..) => unreachable!("choice has a set of start maps"),
    }
}

impl HybKernel for Sem<'_> {
    fn apply(&self, x: &State) -> Result<Traj> {
        match self.p {
            CProg::Skip => Ok(Traj::unit(x.clone())),
            CProg::Assign(m) => Ok(Traj::unit(m.apply(x))),
            CProg::Flow(flow, trig) => self.ctx.atom_traj(flow, trig, x),
            CProg::Seq(a, b) => {
                let tau = Sem { p: a, ctx: self.ctx, n: self.n }.apply(x)?;
                hyb_bind(&tau, &Sem { p: b, ctx: self.ctx, n: self.n })
            }
            CProg::Choice(..) => Err(Error::Mode("choice needs nondet mode".into())),
        }
    }
    fn start_map(&self) -> AffineMap {
        start_map(self.p, self.n)
    }
}

/// Flagged semantics: every point before the end of an evolution carries
/// `⊥` and is left alone by later atoms, so sequencing is concatenation.
fn run_flagged(p: &CProg, ctx: &Ctx, x: &State) -> Result<Traj> {
    match p {
        CProg::Skip => Ok(Traj::unit(x.clone())),
        CProg::Assign(m) => Ok(Traj::unit(m.apply(x))),
        CProg::Flow(flow, trig) => ctx.atom_traj(flow, trig, x),
        CProg::Seq(a, b) => {
            let tau = run_flagged(a, ctx, x)?;
            tau.concat(&run_flagged(b, ctx, &tau.end())?)
        }
        CProg::Choice(..) => Err(Error::Mode("choice needs nondet mode".into())),
    }
}

fn start_maps(p: &CProg, n: usize) -> Vec<AffineMap> {
    match p {
        CProg::Choice(a, b) => {
            let mut v = start_maps(a, n);
            for m in start_maps(b, n) {
                if !v.contains(&m) {
                    v.push(m);
                }
            }
            v
        }
        CProg::Seq(a, b) => {
            let mut v: Vec<AffineMap> = vec![];
            for sa in start_maps(a, n) {
                for sb in start_maps(b, n) {
                    let m = sb.after(&sa);
                    if !v.contains(&m) {
                        v.push(m);
                    }
                }
            }
            v
        }
        _ => vec![start_map(p, n)],
    }
}

pub(crate) fn push_unique(set: &mut Vec<Traj>, t: Traj) {
    if !set.contains(&t) {
        set.push(t);
    }
}

/// `Q∘H` semantics. For `τ ∈ ⟦p⟧x` the composite selects, pointwise along
/// `τ`, a start value of `⟦q⟧`. When the alternatives of `q` share their start
/// map that selection is unique and the result is finite; otherwise the set
/// of selections is uncountable and the run is refused.
fn run_nondet(p: &CProg, ctx: &Ctx, x: &State, n: usize) -> Result<Vec<Traj>> {
    match p {
        CProg::Choice(a, b) => {
            let mut v = run_nondet(a, ctx, x, n)?;
            for t in run_nondet(b, ctx, x, n)? {
                push_unique(&mut v, t);
            }
            Ok(v)
        }
        CProg::Seq(a, b) => {
            let heads = start_maps(b, n);
            let mut out = vec![];
            for tau in run_nondet(a, ctx, x, n)? {
                if tau.duration() > 0.0 && heads.len() > 1 {
                    return Err(Error::Unsupported(
                        "alternatives with different start maps after a positive-duration evolution give uncountably many selections".into(),
                    ));
                }
                let head = tau.map_affine(&heads[0]);
                for sigma in run_nondet(b, ctx, &tau.end(), n)? {
                    push_unique(&mut out, head.concat(&sigma)?);
                }
            }
            Ok(out)
        }
        _ => Ok(vec![Sem { p, ctx, n }.apply(x)?]),
    }
}

/// Runs `prog` from `x0` over the variables `vars`.
pub fn run_hyb(prog: &HybProg, vars: &[String], x0: &[f64], mode: Mode, cfg: &NumericConfig) -> Result<HybRun> {
    cfg.validate()?;
    if x0.len() != vars.len() {
        return Err(Error::InvalidValue(format!("{} variables but {} initial values", vars.len(), x0.len())));
    }
    if x0.iter().any(|v| !v.is_finite()) {
        return Err(Error::Numeric("non-finite initial state".into()));
    }
    let c = compile(prog, vars, mode)?;
    let ctx = Ctx { cfg, clock: RefCell::new(0.0), hits: RefCell::new(vec![]), warnings: RefCell::new(vec![]) };
    let x = DVector::from_column_slice(x0);
    let n = vars.len();
    let trajs = match mode {
        Mode::Time | Mode::Event => vec![Sem { p: &c, ctx: &ctx, n }.apply(&x)?],
        Mode::Flagged => vec![run_flagged(&c, &ctx, &x)?],
        Mode::Nondet => run_nondet(&c, &ctx, &x, n)?,
    };
    Ok(HybRun { vars: vars.to_vec(), mode, trajs, hits: ctx.hits.into_inner(), warnings: ctx.warnings.into_inner() })
}

/// Parses `"p=5,v=0"` into names and values.
pub fn parse_init(s: &str) -> Result<(Vec<String>, Vec<f64>)> {
    let mut vars = vec![];
    let mut vals = vec![];
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or_else(|| Error::InvalidValue(format!("expected name=value, got `{part}`")))?;
        let k = k.trim().to_string();
        if vars.contains(&k) {
            return Err(Error::DuplicateVariable(k));
        }
        let v: f64 = v.trim().parse().map_err(|_| Error::InvalidValue(format!("bad initial value `{v}`")))?;
        vars.push(k);
        vals.push(v);
    }
    Ok((vars, vals))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyb::parse_hyb;

    pub(crate) const BALL: &str =
        "(v := 0, p := 5) ; b ; b ; b";

    fn ball_block() -> String {
        "(p' = v, v' = -9.8 & p <= 0 && v <= 0) ; (v := -0.5*v, p := p)".into()
    }

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn ball_hit_time() {
        let flow = AffineFlow::new(DMatrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]), DVector::from_vec(vec![0.0, -9.8])).unwrap();
        let p = parse_hyb("(p' = v, v' = -9.8 & p <= 0 && v <= 0)").unwrap();
        let CProg::Flow(_, CTrigger::Event(psi)) = compile(&p, &vars(&["p", "v"]), Mode::Event).unwrap() else { panic!() };
        let cfg = NumericConfig::default();
        let HitResult::Time(t) = hit_time(&flow, &psi, &cfg, &DVector::from_vec(vec![5.0, 0.0])) else { panic!() };
        assert!((t - (10.0f64 / 9.8).sqrt()).abs() < 1e-8);
        assert_eq!(hit_time(&flow, &psi, &cfg, &DVector::from_vec(vec![-1.0, -1.0])), HitResult::Time(0.0));
    }

    #[test]
    fn unsatisfiable_event() {
        let p = parse_hyb("(x' = 1 & x >= 5 && x <= 4)").unwrap();
        let r = run_hyb(&p, &vars(&["x"]), &[0.0], Mode::Event, &NumericConfig::default()).unwrap();
        assert_eq!(r.trajs[0].duration(), 0.0);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn bouncing_ball() {
        let src = BALL.replace('b', &format!("{{ {} }}", ball_block()));
        let prog = parse_hyb(&src).unwrap();
        let r = run_hyb(&prog, &vars(&["p", "v"]), &[0.0, 0.0], Mode::Event, &NumericConfig::default()).unwrap();
        let speeds: Vec<f64> = r.hits.iter().map(|h| h.state[1].abs()).collect();
        let want = [98f64.sqrt(), 98f64.sqrt() / 2.0, 98f64.sqrt() / 4.0];
        for (s, w) in speeds.iter().zip(want) {
            assert!((s - w).abs() < 1e-6, "{speeds:?}");
        }
        let tau = &r.trajs[0];
        for k in 0..100 {
            let t = k as f64 * 0.01;
            assert!((tau.eval(t).unwrap()[0] - (5.0 - 4.9 * t * t)).abs() < 1e-9);
        }
    }

    #[test]
    fn modes_are_checked() {
        let p = parse_hyb("(x' = 1 & 2)").unwrap();
        assert!(matches!(run_hyb(&p, &vars(&["x"]), &[0.0], Mode::Event, &NumericConfig::default()), Err(Error::Mode(_))));
        let q = parse_hyb("(x' = 1 & x >= 1)").unwrap();
        assert!(matches!(run_hyb(&q, &vars(&["x"]), &[0.0], Mode::Time, &NumericConfig::default()), Err(Error::Mode(_))));
        let c = parse_hyb("choice { skip | skip }").unwrap();
        assert!(matches!(run_hyb(&c, &vars(&["x"]), &[0.0], Mode::Time, &NumericConfig::default()), Err(Error::Mode(_))));
        let o = parse_hyb("(x := 1)").unwrap();
        assert!(matches!(run_hyb(&o, &vars(&["x", "y"]), &[0.0, 0.0], Mode::Time, &NumericConfig::default()), Err(Error::OmittedVariable(v)) if v == "y"));
        assert!(matches!(run_hyb(&o, &vars(&["y"]), &[0.0], Mode::Time, &NumericConfig::default()), Err(Error::UnknownVariable(_))));
    }

    #[test]
    fn reactor_choice() {
        let p = parse_hyb("choice { (temp' = 1 & 3) | (temp' = -1 & 3) }").unwrap();
        let r = run_hyb(&p, &vars(&["temp"]), &[20.0], Mode::Nondet, &NumericConfig::default()).unwrap();
        assert_eq!(r.trajs.len(), 2);
        let mut ends: Vec<f64> = r.trajs.iter().map(|t| t.end()[0]).collect();
        ends.sort_by(f64::total_cmp);
        assert_eq!(ends, vec![17.0, 23.0]);
    }
}
