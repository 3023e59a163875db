//! Continuous trajectories of the hybrid monad `H X = ∐_d hom([0,d], X)`,
//! realised as lists of constant or affine-flow segments.

use crate::error::{Error, Result};
use crate::expm::AffineFlow;
use nalgebra::{DMatrix, DVector};
use std::sync::Arc;

pub type State = DVector<f64>;

/// `x ↦ M x + c`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap {
    pub m: DMatrix<f64>,
    pub c: DVector<f64>,
}

impl AffineMap {
    pub fn identity(n: usize) -> Self {
        AffineMap { m: DMatrix::identity(n, n), c: DVector::zeros(n) }
    }

    pub fn apply(&self, x: &State) -> State {
        &self.m * x + &self.c
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &AffineMap) -> AffineMap {
        AffineMap { m: &self.m * &first.m, c: &self.m * &first.c + &self.c }
    }

    pub fn is_identity(&self) -> bool {
        self.m == DMatrix::identity(self.m.nrows(), self.m.ncols()) && self.c.iter().all(|x| *x == 0.0)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Generator {
    Const(State),
    /// The flow from `x0`, observed through `view` when present.
    Affine { flow: Arc<AffineFlow>, x0: State, view: Option<AffineMap> },
}

impl Generator {
    fn eval(&self, s: f64) -> State {
        match self {
            Generator::Const(x) => x.clone(),
            Generator::Affine { flow, x0, view } => {
                let x = flow.eval(x0, s);
                match view {
                    Some(v) => v.apply(&x),
                    None => x,
                }
            }
        }
    }

    fn mapped(&self, g: &AffineMap) -> Generator {
        match self {
            Generator::Const(x) => Generator::Const(g.apply(x)),
            Generator::Affine { flow, x0, view } => {
                let v = match view {
                    Some(v) => g.after(v),
                    None => g.clone(),
                };
                Generator::Affine { flow: flow.clone(), x0: x0.clone(), view: (!v.is_identity()).then_some(v) }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    pub len: f64,
    pub gen: Generator,
}

/// A trajectory; at internal junctions the value is taken from the later
/// segment.
#[derive(Clone, Debug, PartialEq)]
pub struct Traj {
    dim: usize,
    segments: Vec<Segment>,
}

fn check_len(d: f64) -> Result<()> {
    if d.is_finite() && d >= 0.0 {
        Ok(())
    } else {
        Err(Error::Numeric(format!("bad duration {d}")))
    }
}

impl Traj {
    /// `η(x) = (const x, 0)`.
    pub fn unit(x: State) -> Self {
        Traj { dim: x.len(), segments: vec![Segment { len: 0.0, gen: Generator::Const(x) }] }
    }

    pub fn constant(x: State, d: f64) -> Result<Self> {
        check_len(d)?;
        Ok(Traj { dim: x.len(), segments: vec![Segment { len: d, gen: Generator::Const(x) }] })
    }

    pub fn flow(flow: Arc<AffineFlow>, x0: State, d: f64) -> Result<Self> {
        check_len(d)?;
        if x0.len() != flow.dim() {
            return Err(Error::InvalidValue("initial state has the wrong dimension".into()));
        }
        Ok(Traj { dim: x0.len(), segments: vec![Segment { len: d, gen: Generator::Affine { flow, x0, view: None } }] })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn duration(&self) -> f64 {
        self.segments.iter().map(|s| s.len).sum()
    }

    /// Start times of the segments.
    pub fn starts(&self) -> Vec<f64> {
        let mut acc = 0.0;
        self.segments
            .iter()
            .map(|s| {
                let t = acc;
                acc += s.len;
                t
            })
            .collect()
    }

    fn in_domain(&self, t: f64) -> Result<f64> {
        let d = self.duration();
        let slack = 1e-12 * d.max(1.0);
        if !(t >= -slack && t <= d + slack) {
            return Err(Error::Domain(t, d));
        }
        Ok(t.clamp(0.0, d))
    }

    /// Right-continuous evaluation.
    pub fn eval(&self, t: f64) -> Result<State> {
        let t = self.in_domain(t)?;
        let starts = self.starts();
        let k = starts.iter().rposition(|s| *s <= t).unwrap_or(0);
        let local = (t - starts[k]).min(self.segments[k].len).max(0.0);
        Ok(self.segments[k].gen.eval(local))
    }

    /// Left limit at `t` (equal to [`Traj::eval`] at `t = 0`).
    pub fn eval_left(&self, t: f64) -> Result<State> {
        let t = self.in_domain(t)?;
        let starts = self.starts();
        match starts.iter().rposition(|s| *s < t) {
            Some(k) => {
                let local = (t - starts[k]).min(self.segments[k].len);
                Ok(self.segments[k].gen.eval(local))
            }
            None => self.eval(t),
        }
    }

    /// θ: the value at time 0.
    pub fn start(&self) -> State {
        self.segments[0].gen.eval(0.0)
    }

    pub fn end(&self) -> State {
        let last = self.segments.last().unwrap();
        last.gen.eval(last.len)
    }

    /// `self ++ other`: duration adds; the junction value comes from `other`.
    pub fn concat(&self, other: &Traj) -> Result<Traj> {
        if self.dim != other.dim {
            return Err(Error::CarrierMismatch(format!("dimensions {} and {}", self.dim, other.dim)));
        }
        let mut segments = self.segments.clone();
        segments.extend(other.segments.iter().cloned());
        Ok(Traj { dim: self.dim, segments })
    }

    /// Pointwise image under an affine map.
    pub fn map_affine(&self, g: &AffineMap) -> Traj {
        Traj {
            dim: g.c.len(),
            segments: self.segments.iter().map(|s| Segment { len: s.len, gen: s.gen.mapped(g) }).collect(),
        }
    }

    /// Exact descriptor equality, else agreement on a `dt` grid within `tol`.
    pub fn approx_eq(&self, other: &Traj, dt: f64, tol: f64) -> bool {
        if self == other {
            return true;
        }
        let (d1, d2) = (self.duration(), other.duration());
        if (d1 - d2).abs() > tol || self.dim != other.dim {
            return false;
        }
        let d = d1.min(d2);
        let mut k = 0usize;
        loop {
            let t = (k as f64 * dt).min(d);
            let (a, b) = match (self.eval(t), other.eval(t)) {
                (Ok(a), Ok(b)) => (a, b),
                _ => return false,
            };
            if (a - b).amax() > tol {
                return false;
            }
            if t >= d {
                return true;
            }
            k += 1;
        }
    }
}

/// A Kleisli arrow `ℝⁿ → H ℝⁿ` whose start map `θ ∘ f` is affine. Every
/// program of the hybrid language denotes such an arrow.
pub trait HybKernel {
    fn apply(&self, x: &State) -> Result<Traj>;
    fn start_map(&self) -> AffineMap;
}

/// `μ(H g τ)`: the head of `τ` seen through `θ ∘ g`, then `g` run from the end.
pub fn hyb_bind(tau: &Traj, g: &dyn HybKernel) -> Result<Traj> {
    let head = tau.map_affine(&g.start_map());
    head.concat(&g.apply(&tau.end())?)
}

pub struct UnitKernel(pub usize);

impl HybKernel for UnitKernel {
    fn apply(&self, x: &State) -> Result<Traj> {
        Ok(Traj::unit(x.clone()))
    }
    fn start_map(&self) -> AffineMap {
        AffineMap::identity(self.0)
    }
}

/// A flow of fixed duration.
pub struct FlowKernel {
    pub flow: Arc<AffineFlow>,
    pub duration: f64,
}

impl HybKernel for FlowKernel {
    fn apply(&self, x: &State) -> Result<Traj> {
        Traj::flow(self.flow.clone(), x.clone(), self.duration)
    }
    fn start_map(&self) -> AffineMap {
        AffineMap::identity(self.flow.dim())
    }
}

/// An affine assignment `x := M x + c`, taking no time.
pub struct AssignKernel(pub AffineMap);

impl HybKernel for AssignKernel {
    fn apply(&self, x: &State) -> Result<Traj> {
        Ok(Traj::unit(self.0.apply(x)))
    }
    fn start_map(&self) -> AffineMap {
        self.0.clone()
    }
}

/// Kleisli composite `g ∘_H f`.
pub struct Composed<'a>(pub &'a dyn HybKernel, pub &'a dyn HybKernel);

impl HybKernel for Composed<'_> {
    fn apply(&self, x: &State) -> Result<Traj> {
        hyb_bind(&self.0.apply(x)?, self.1)
    }
    fn start_map(&self) -> AffineMap {
        self.1.start_map().after(&self.0.start_map())
    }
}

pub fn kleisli_compose<'a>(f: &'a dyn HybKernel, g: &'a dyn HybKernel) -> Composed<'a> {
    Composed(f, g)
}
