//! Functors restricted to finite carriers `{0,…,n−1}` with enumerable values.

use crate::monad::dist::{Dist, DistBounds, DistM};
use crate::monad::{Enumerable, Monad};
use std::collections::BTreeSet;
use std::fmt::Debug;
use std::marker::PhantomData;

/// A function `{0..n} → {0..m}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FinMap {
    pub table: Vec<usize>,
    pub codomain: usize,
}

impl FinMap {
    pub fn domain(&self) -> usize {
        self.table.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }
}

/// All maps `n → m`, in lexicographic order.
pub fn all_maps(n: usize, m: usize) -> Vec<FinMap> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<usize>| {
                (0..m).map(move |y| {
                    let mut q = p.clone();
                    q.push(y);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(|table| FinMap { table, codomain: m }).collect()
}

/// A functor on finite carriers, with a bounded list of values per carrier.
pub trait FinFunctor {
    type Value: Clone + Ord + Debug;

    fn name(&self) -> String;
    fn values(&self, n: usize) -> Vec<Self::Value>;
    fn map(&self, f: &FinMap, v: &Self::Value) -> Self::Value;
}

/// The identity functor.
#[derive(Clone, Copy, Debug, Default)]
pub struct IdF;

impl FinFunctor for IdF {
    type Value = usize;

    fn name(&self) -> String {
        "Id".into()
    }
    fn values(&self, n: usize) -> Vec<usize> {
        (0..n).collect()
    }
    fn map(&self, f: &FinMap, v: &usize) -> usize {
        f.apply(*v)
    }
}

/// The underlying functor of an enumerable monad.
pub struct MonadF<M: Enumerable> {
    pub bounds: M::Bounds,
    _m: PhantomData<M>,
}

impl<M: Enumerable> MonadF<M> {
    pub fn new(bounds: M::Bounds) -> Self {
        MonadF { bounds, _m: PhantomData }
    }
}

impl<M: Enumerable> Clone for MonadF<M> {
    fn clone(&self) -> Self {
        MonadF::new(self.bounds.clone())
    }
}

impl<M: Enumerable> FinFunctor for MonadF<M> {
    type Value = M::Val<usize>;

    fn name(&self) -> String {
        M::name()
    }
    fn values(&self, n: usize) -> Vec<Self::Value> {
        M::enumerate(&(0..n).collect::<Vec<_>>(), &self.bounds)
    }
    fn map(&self, f: &FinMap, v: &Self::Value) -> Self::Value {
        M::fmap(v, |x| f.apply(*x))
    }
}

/// `Fᵏ`.
#[derive(Clone)]
pub struct Power<F> {
    pub inner: F,
    pub arity: usize,
}

impl<F: FinFunctor> FinFunctor for Power<F> {
    type Value = Vec<F::Value>;

    fn name(&self) -> String {
        format!("{}^{}", self.inner.name(), self.arity)
    }
    fn values(&self, n: usize) -> Vec<Vec<F::Value>> {
        let base = self.inner.values(n);
        let mut out = vec![vec![]];
        for _ in 0..self.arity {
            out = out
                .into_iter()
                .flat_map(|p: Vec<F::Value>| {
                    base.iter().map(move |v| {
                        let mut q = p.clone();
                        q.push(v.clone());
                        q
                    })
                })
                .collect();
        }
        out
    }
    fn map(&self, f: &FinMap, v: &Vec<F::Value>) -> Vec<F::Value> {
        v.iter().map(|x| self.inner.map(f, x)).collect()
    }
}

/// `P∘D`: sets of distributions with bounded denominators.
#[derive(Clone, Copy, Debug)]
pub struct PdF {
    pub dist: DistBounds,
}

impl FinFunctor for PdF {
    type Value = BTreeSet<Dist<usize>>;

    fn name(&self) -> String {
        "P∘D".into()
    }
    fn values(&self, n: usize) -> Vec<Self::Value> {
        let ds = DistM::enumerate(&(0..n).collect::<Vec<_>>(), &self.dist);
        let k = ds.len();
        assert!(k < 20, "P∘D fragment too large");
        (0u32..1 << k)
            .map(|mask| (0..k).filter(|i| mask >> i & 1 == 1).map(|i| ds[i].clone()).collect())
            .collect()
    }
    fn map(&self, f: &FinMap, v: &Self::Value) -> Self::Value {
        v.iter().map(|d| DistM::fmap(d, |x| f.apply(*x))).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::maybe::MaybeM;

    #[test]
    fn map_counts() {
        assert_eq!(all_maps(3, 2).len(), 8);
        assert_eq!(all_maps(0, 3).len(), 1);
        assert_eq!(all_maps(2, 0).len(), 0);
    }

    #[test]
    fn power_values() {
        let p = Power { inner: MonadF::<MaybeM>::new(()), arity: 2 };
        assert_eq!(p.values(2).len(), 9);
        assert_eq!(p.values(0).len(), 1);
    }
}
