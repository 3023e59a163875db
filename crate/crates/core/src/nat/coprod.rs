//! Functors of the form `F X = ∐ᵢ X^{[i]}` and their binary natural
//! operations, which are determined by coordinates `s_ij ∈ F([i] + [j])`.

use super::check::Family;
use super::functor::{FinFunctor, Power};
use crate::error::{Error, Result};
use crate::monad::discrete::DiscreteTraj;
use crate::monad::maybe::Maybe;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// A point of `[i] + [j]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    Left(usize),
    Right(usize),
}

impl Side {
    pub fn swap(self) -> Side {
        match self {
            Side::Left(t) => Side::Right(t),
            Side::Right(t) => Side::Left(t),
        }
    }

    pub fn position(self) -> usize {
        match self {
            Side::Left(t) | Side::Right(t) => t,
        }
    }
}

/// An element of `F([i] + [j])`: a summand and a map `[size(summand)] → [i] + [j]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub summand: usize,
    pub route: Vec<Side>,
}

impl Coord {
    pub fn swap(&self) -> Coord {
        Coord { summand: self.summand, route: self.route.iter().map(|s| s.swap()).collect() }
    }
}

/// Index set and arities of the summands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `1 + X`: summand 0 is nullary, summand 1 unary.
    Maybe,
    /// `∐_d X^{d+1}` truncated at `max_duration`.
    DiscreteTraj { max_duration: usize },
}

impl Shape {
    pub fn indices(&self) -> Vec<usize> {
        match self {
            Shape::Maybe => vec![0, 1],
            Shape::DiscreteTraj { max_duration } => (0..=*max_duration).collect(),
        }
    }

    pub fn size(&self, i: usize) -> usize {
        match self {
            Shape::Maybe => i,
            Shape::DiscreteTraj { .. } => i + 1,
        }
    }

    /// Whether `k` names a summand (durations are unbounded).
    pub fn admits(&self, k: usize) -> bool {
        match self {
            Shape::Maybe => k <= 1,
            Shape::DiscreteTraj { .. } => true,
        }
    }

    /// Summands with empty exponent, i.e. the elements of `F∅`.
    pub fn constants(&self) -> Vec<usize> {
        self.indices().into_iter().filter(|&i| self.size(i) == 0).collect()
    }
}

/// Values that decompose as a summand index plus a tuple.
pub trait CoprodCarrier: Sized {
    type Item: Clone;
    fn decompose(&self) -> (usize, Vec<Self::Item>);
    fn compose(summand: usize, items: Vec<Self::Item>) -> Result<Self>;
}

impl<A: Clone> CoprodCarrier for Maybe<A> {
    type Item = A;
    fn decompose(&self) -> (usize, Vec<A>) {
        match self {
            Maybe::Bottom => (0, vec![]),
            Maybe::Just(a) => (1, vec![a.clone()]),
        }
    }
    fn compose(summand: usize, items: Vec<A>) -> Result<Self> {
        match (summand, items.as_slice()) {
            (0, []) => Ok(Maybe::Bottom),
            (1, [a]) => Ok(Maybe::Just(a.clone())),
            _ => Err(Error::InvalidValue(format!("no Maybe value in summand {summand} of arity {}", items.len()))),
        }
    }
}

impl<A: Clone> CoprodCarrier for DiscreteTraj<A> {
    type Item = A;
    fn decompose(&self) -> (usize, Vec<A>) {
        (self.duration(), self.values().to_vec())
    }
    fn compose(summand: usize, items: Vec<A>) -> Result<Self> {
        if items.len() != summand + 1 {
            return Err(Error::InvalidValue(format!("duration {summand} needs {} values", summand + 1)));
        }
        DiscreteTraj::new(items)
    }
}

pub type CoordRule = Arc<dyn Fn(usize, usize) -> Coord + Send + Sync>;

/// A binary operation given by its coordinates.
#[derive(Clone)]
pub struct CoprodCoords {
    pub shape: Shape,
    pub rule: CoordRule,
}

impl fmt::Debug for CoprodCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.shape.indices();
        let shown: Vec<_> = idx.iter().take(3).flat_map(|&i| idx.iter().take(3).map(move |&j| (i, j))).collect();
        write!(f, "CoprodCoords({:?}", self.shape)?;
        for (i, j) in shown {
            write!(f, ", s{i}{j}={:?}", (self.rule)(i, j))?;
        }
        write!(f, ")")
    }
}

impl CoprodCoords {
    pub fn new(shape: Shape, rule: impl Fn(usize, usize) -> Coord + Send + Sync + 'static) -> Result<Self> {
        let c = CoprodCoords { shape, rule: Arc::new(rule) };
        c.validate()?;
        Ok(c)
    }

    pub fn at(&self, i: usize, j: usize) -> Coord {
        (self.rule)(i, j)
    }

    /// Every `s_ij` must be a well-typed element of `F([i] + [j])`.
    pub fn validate(&self) -> Result<()> {
        let sh = self.shape;
        for i in sh.indices() {
            for j in sh.indices() {
                let c = self.at(i, j);
                let ok = sh.admits(c.summand)
                    && c.route.len() == sh.size(c.summand)
                    && c.route.iter().all(|s| match *s {
                        Side::Left(t) => t < sh.size(i),
                        Side::Right(t) => t < sh.size(j),
                    });
                if !ok {
                    return Err(Error::InvalidValue(format!("coordinate s{i}{j} = {c:?} is ill-typed")));
                }
            }
        }
        Ok(())
    }

    /// `(a, b) ↦ F[a, b](s_ij)`.
    pub fn apply<V: CoprodCarrier>(&self, a: &V, b: &V) -> Result<V> {
        let (i, xs) = a.decompose();
        let (j, ys) = b.decompose();
        let c = self.at(i, j);
        let items = c
            .route
            .iter()
            .map(|s| match *s {
                Side::Left(t) => xs.get(t).cloned(),
                Side::Right(t) => ys.get(t).cloned(),
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::InvalidValue(format!("coordinate s{i}{j} routes outside its arguments")))?;
        V::compose(c.summand, items)
    }

    /// Reads coordinates off a natural family by evaluating it on the generic
    /// pair over `[i] + [j]`.
    pub fn from_family<F, A>(shape: Shape, family: &A) -> Result<Self>
    where
        F: FinFunctor,
        F::Value: CoprodCarrier<Item = usize>,
        A: Family<Power<F>, F> + ?Sized,
    {
        let idx = shape.indices();
        let mut table = std::collections::BTreeMap::new();
        for &i in &idx {
            for &j in &idx {
                let (si, sj) = (shape.size(i), shape.size(j));
                let a = F::Value::compose(i, (0..si).collect())?;
                let b = F::Value::compose(j, (si..si + sj).collect())?;
                let out = family
                    .component(si + sj, &vec![a, b])
                    .ok_or_else(|| Error::Fragment(format!("family undefined on carrier {}", si + sj)))?;
                let (k, items) = out.decompose();
                let route = items.into_iter().map(|v| if v < si { Side::Left(v) } else { Side::Right(v - si) }).collect();
                table.insert((i, j), Coord { summand: k, route });
            }
        }
        CoprodCoords::new(shape, move |i, j| table[&(i, j)].clone())
    }

    pub fn table(&self) -> Vec<((usize, usize), Coord)> {
        let idx = self.shape.indices();
        idx.iter().flat_map(|&i| idx.iter().map(move |&j| ((i, j), self.at(i, j)))).collect()
    }
}

/// Where the `(Just, Just)` coordinate goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum C2 {
    Left,
    Right,
    Bot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Keep {
    Keep,
    Drop,
}

/// The twelve binary operations on Maybe, by their three non-trivial coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MaybeCode {
    pub c2: C2,
    pub c10: Keep,
    pub c01: Keep,
}

impl MaybeCode {
    pub fn all() -> Vec<MaybeCode> {
        let mut out = vec![];
        for c2 in [C2::Left, C2::Right, C2::Bot] {
            for c10 in [Keep::Keep, Keep::Drop] {
                for c01 in [Keep::Keep, Keep::Drop] {
                    out.push(MaybeCode { c2, c10, c01 });
                }
            }
        }
        out
    }

    pub fn coord(&self, i: usize, j: usize) -> Coord {
        let bot = Coord { summand: 0, route: vec![] };
        let just = |s| Coord { summand: 1, route: vec![s] };
        match (i, j) {
            (1, 1) => match self.c2 {
                C2::Left => just(Side::Left(0)),
                C2::Right => just(Side::Right(0)),
                C2::Bot => bot,
            },
            (1, 0) if self.c10 == Keep::Keep => just(Side::Left(0)),
            (0, 1) if self.c01 == Keep::Keep => just(Side::Right(0)),
            _ => bot,
        }
    }

    pub fn coords(&self) -> CoprodCoords {
        let c = *self;
        CoprodCoords { shape: Shape::Maybe, rule: Arc::new(move |i, j| c.coord(i, j)) }
    }

    pub fn apply<A: Clone>(&self, a: &Maybe<A>, b: &Maybe<A>) -> Maybe<A> {
        self.coords().apply(a, b).expect("Maybe codes are well-typed")
    }

    pub fn from_coords(c: &CoprodCoords) -> Option<MaybeCode> {
        if c.shape != Shape::Maybe {
            return None;
        }
        MaybeCode::all().into_iter().find(|m| c.table().iter().all(|((i, j), s)| m.coord(*i, *j) == *s))
    }
}

impl fmt::Display for MaybeCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?},{:?},{:?})", self.c2, self.c10, self.c01)
    }
}

/// Binary operations on hybrid trajectories given by a routing scheme.
#[derive(Clone)]
pub enum HybridScheme {
    LeftProj,
    RightProj,
    Concat,
    Custom(CoordRule),
}

impl fmt::Debug for HybridScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HybridScheme::LeftProj => write!(f, "LeftProj"),
            HybridScheme::RightProj => write!(f, "RightProj"),
            HybridScheme::Concat => write!(f, "Concat"),
            HybridScheme::Custom(_) => write!(f, "Custom"),
        }
    }
}

impl HybridScheme {
    /// Coordinates on the discrete-time fragment; `i`, `j` are durations.
    pub fn coord(&self, i: usize, j: usize) -> Coord {
        match self {
            HybridScheme::LeftProj => Coord { summand: i, route: (0..=i).map(Side::Left).collect() },
            HybridScheme::RightProj => Coord { summand: j, route: (0..=j).map(Side::Right).collect() },
            HybridScheme::Concat => Coord {
                summand: i + j,
                route: (0..=i + j).map(|t| if t < i { Side::Left(t) } else { Side::Right(t - i) }).collect(),
            },
            HybridScheme::Custom(rule) => rule(i, j),
        }
    }

    /// Coordinates with checks quantifying over durations `≤ max_duration`.
    pub fn coords(&self, max_duration: usize) -> Result<CoprodCoords> {
        let s = self.clone();
        CoprodCoords::new(Shape::DiscreteTraj { max_duration }, move |i, j| s.coord(i, j))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_distinct_codes() {
        let all = MaybeCode::all();
        assert_eq!(all.len(), 12);
        for (k, a) in all.iter().enumerate() {
            for b in &all[k + 1..] {
                assert_ne!(a.coords().table(), b.coords().table());
            }
        }
    }

    #[test]
    fn concat_routes() {
        let a = DiscreteTraj::constant('a', 1);
        let b = DiscreteTraj::constant('b', 2);
        let out = HybridScheme::Concat.coords(2).unwrap().apply(&a, &b).unwrap();
        assert_eq!(out.values(), &['a', 'b', 'b', 'b']);
    }
}
