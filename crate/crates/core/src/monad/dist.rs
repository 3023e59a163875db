//! Finite-support rational distributions `D_r`, and subdistributions realised
//! as distributions over `X + 1`.

use super::maybe::Maybe;
use super::{compositions, subsets_upto, Elem, Enumerable, Monad};
use crate::error::{Error, Result};
use crate::rat::{in_unit_interval, Rat};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported probability distribution with exact weights.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dist<A: Ord> {
    w: BTreeMap<A, Rat>,
}

/// Subdistribution: a total distribution over the carrier extended with `⊥`.
pub type SubDist<A> = Dist<Maybe<A>>;

impl<A: Ord + Clone> Dist<A> {
    pub fn point(a: A) -> Self {
        Dist { w: BTreeMap::from([(a, Rat::one())]) }
    }

    /// Validating constructor: duplicate keys are summed, zero weights dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (A, Rat)>) -> Result<Self> {
        let mut total = Rat::zero();
        let mut w = BTreeMap::new();
        for (a, r) in pairs {
            if r < Rat::zero() {
                return Err(Error::InvalidValue(format!("negative weight {r}")));
            }
            total += r;
            *w.entry(a).or_insert_with(Rat::zero) += r;
        }
        if total != Rat::one() {
            return Err(Error::InvalidValue(format!("weights sum to {total}, not 1")));
        }
        w.retain(|_, r| !r.is_zero());
        Ok(Dist { w })
    }

    /// Sums duplicates and drops zeros without checking the total.
    pub(crate) fn collect(pairs: impl IntoIterator<Item = (A, Rat)>) -> Self {
        let mut w = BTreeMap::new();
        for (a, r) in pairs {
            *w.entry(a).or_insert_with(Rat::zero) += r;
        }
        w.retain(|_, r| !r.is_zero());
        Dist { w }
    }

    pub fn weight(&self, a: &A) -> Rat {
        self.w.get(a).copied().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A, &Rat)> {
        self.w.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &A> {
        self.w.keys()
    }

    pub fn support_len(&self) -> usize {
        self.w.len()
    }

    pub fn total(&self) -> Rat {
        self.w.values().copied().sum()
    }

    pub fn map<B: Ord + Clone>(&self, f: impl Fn(&A) -> B) -> Dist<B> {
        Dist::collect(self.w.iter().map(|(a, r)| (f(a), *r)))
    }

    pub fn bind<B: Ord + Clone>(&self, f: impl Fn(&A) -> Dist<B>) -> Dist<B> {
        Dist::collect(
            self.w
                .iter()
                .flat_map(|(a, r)| f(a).w.into_iter().map(move |(b, s)| (b, *r * s)).collect::<Vec<_>>()),
        )
    }

    /// `λ·self + (1−λ)·other`.
    pub fn convex(&self, lambda: Rat, other: &Dist<A>) -> Dist<A> {
        let mu = Rat::one() - lambda;
        Dist::collect(
            self.w
                .iter()
                .map(|(a, r)| (a.clone(), lambda * r))
                .chain(other.w.iter().map(|(a, r)| (a.clone(), mu * r))),
        )
    }

    /// Weights as a vector over an indexed carrier.
    pub fn dense(&self, index: impl Fn(&A) -> usize, len: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); len];
        for (a, r) in &self.w {
            v[index(a)] += r;
        }
        v
    }
}

impl<A: Ord + Clone> Dist<Maybe<A>> {
    /// Weight not assigned to `⊥`.
    pub fn mass(&self) -> Rat {
        Rat::one() - self.weight(&Maybe::Bottom)
    }
}

impl<A: Ord + fmt::Debug> fmt::Debug for Dist<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, r)) in self.w.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a:?}↦{r}")?;
        }
        f.write_str("}")
    }
}

/// Which denominators a fragment admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Denominators {
    /// Every weight is a multiple of `1/d`.
    Dividing(u64),
    /// Every weight has reduced denominator at most `d`.
    AtMost(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistBounds {
    pub denominators: Denominators,
    pub max_support: Option<usize>,
}

impl DistBounds {
    pub fn dividing(d: u64) -> Self {
        DistBounds { denominators: Denominators::Dividing(d), max_support: None }
    }

    pub fn at_most(d: u64) -> Self {
        DistBounds { denominators: Denominators::AtMost(d), max_support: None }
    }

    pub fn support(mut self, s: usize) -> Self {
        self.max_support = Some(s);
        self
    }

    fn grid(&self) -> u64 {
        match self.denominators {
            Denominators::Dividing(d) => d,
            Denominators::AtMost(d) => (1..=d).fold(1, num_integer::lcm),
        }
    }

    fn admits(&self, r: &Rat) -> bool {
        match self.denominators {
            Denominators::Dividing(d) => d % (*r.denom() as u64) == 0,
            Denominators::AtMost(d) => (*r.denom() as u64) <= d,
        }
    }
}

pub struct DistM;

impl Monad for DistM {
    type Val<A: Elem> = Dist<A>;

    fn name() -> String {
        "Dist".into()
    }

    fn unit<A: Elem>(a: A) -> Dist<A> {
        Dist::point(a)
    }

    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &Dist<A>, f: F) -> Dist<B> {
        v.map(f)
    }

    fn join<A: Elem>(vv: &Dist<Dist<A>>) -> Dist<A> {
        vv.bind(|d| d.clone())
    }
}

impl Enumerable for DistM {
    type Bounds = DistBounds;

    fn enumerate<A: Elem>(carrier: &[A], b: &DistBounds) -> Vec<Dist<A>> {
        let grid = b.grid();
        let max_s = b.max_support.unwrap_or(carrier.len()).min(carrier.len());
        let mut out = Vec::new();
        for sup in subsets_upto(carrier.len(), max_s) {
            if sup.is_empty() || sup.len() as u64 > grid {
                continue;
            }
            // positive compositions of `grid` into |sup| parts
            for c in compositions(grid - sup.len() as u64, sup.len()) {
                let ws: Vec<Rat> = c.iter().map(|k| Rat::new(*k as i64 + 1, grid as i64)).collect();
                if ws.iter().all(|w| b.admits(w)) {
                    out.push(Dist::collect(sup.iter().zip(ws).map(|(i, w)| (carrier[*i].clone(), w))));
                }
            }
        }
        out
    }
}

/// A coin: `λ·δ_a + (1−λ)·δ_b`.
pub fn coin<A: Ord + Clone>(lambda: Rat, a: A, b: A) -> Result<Dist<A>> {
    if !in_unit_interval(&lambda) {
        return Err(Error::InvalidValue(format!("λ = {lambda} is outside [0,1]")));
    }
    Ok(Dist::point(a).convex(lambda, &Dist::point(b)))
}
