//! Generalised multisets: finitely supported weight functions into a semiring.

use super::{subsets_upto, Elem, Enumerable, Monad};
use crate::rat::Rat;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

/// A semiring of weights. `cid` realises the common-integer-divisor property:
/// for `x₁..xₙ` it returns an invertible `r` and integers `mᵢ` with `xᵢ = mᵢ·r`.
pub trait Semiring: Clone + fmt::Debug + 'static {
    type Elem: super::Elem;

    fn name() -> String;
    fn zero() -> Self::Elem;
    fn one() -> Self::Elem;
    fn add(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn to_rat(a: &Self::Elem) -> Rat;
    fn from_rat(r: &Rat) -> Option<Self::Elem>;
    fn cid(xs: &[Self::Elem]) -> Option<(Self::Elem, Vec<u64>)>;

    fn is_zero(a: &Self::Elem) -> bool {
        *a == Self::zero()
    }

    fn from_int(m: u64) -> Self::Elem {
        (0..m).fold(Self::zero(), |acc, _| Self::add(&acc, &Self::one()))
    }
}

/// The natural numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Natural;

impl Semiring for Natural {
    type Elem = u64;

    fn name() -> String {
        "ℕ".into()
    }
    fn zero() -> u64 {
        0
    }
    fn one() -> u64 {
        1
    }
    fn add(a: &u64, b: &u64) -> u64 {
        a + b
    }
    fn mul(a: &u64, b: &u64) -> u64 {
        a * b
    }
    fn to_rat(a: &u64) -> Rat {
        Rat::from_integer(*a as i64)
    }
    fn from_rat(r: &Rat) -> Option<u64> {
        (r.is_integer() && *r >= Rat::zero()).then(|| r.to_integer() as u64)
    }
    fn cid(xs: &[u64]) -> Option<(u64, Vec<u64>)> {
        Some((1, xs.to_vec()))
    }
    fn from_int(m: u64) -> u64 {
        m
    }
}

/// Nonnegative rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational;

impl Semiring for Rational {
    type Elem = Rat;

    fn name() -> String {
        "ℚ≥0".into()
    }
    fn zero() -> Rat {
        Rat::zero()
    }
    fn one() -> Rat {
        Rat::one()
    }
    fn add(a: &Rat, b: &Rat) -> Rat {
        a + b
    }
    fn mul(a: &Rat, b: &Rat) -> Rat {
        a * b
    }
    fn to_rat(a: &Rat) -> Rat {
        *a
    }
    fn from_rat(r: &Rat) -> Option<Rat> {
        (*r >= Rat::zero()).then_some(*r)
    }
    fn cid(xs: &[Rat]) -> Option<(Rat, Vec<u64>)> {
        if xs.iter().any(|x| *x < Rat::zero()) {
            return None;
        }
        let l = xs.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
        let r = Rat::new(1, l);
        Some((r, xs.iter().map(|x| (x * l).to_integer() as u64).collect()))
    }
    fn from_int(m: u64) -> Rat {
        Rat::from_integer(m as i64)
    }
}

/// A finitely supported map into `S` with no zero entries.
pub struct MultiSet<A: Ord, S: Semiring> {
    w: BTreeMap<A, S::Elem>,
    _s: PhantomData<S>,
}

impl<A: Ord + Clone, S: Semiring> Clone for MultiSet<A, S> {
    fn clone(&self) -> Self {
        MultiSet { w: self.w.clone(), _s: PhantomData }
    }
}
impl<A: Ord, S: Semiring> PartialEq for MultiSet<A, S> {
    fn eq(&self, o: &Self) -> bool {
        self.w == o.w
    }
}
impl<A: Ord, S: Semiring> Eq for MultiSet<A, S> {}
impl<A: Ord, S: Semiring> PartialOrd for MultiSet<A, S> {
    fn partial_cmp(&self, o: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(o))
    }
}
impl<A: Ord, S: Semiring> Ord for MultiSet<A, S> {
    fn cmp(&self, o: &Self) -> std::cmp::Ordering {
        self.w.cmp(&o.w)
    }
}
impl<A: Ord + fmt::Debug, S: Semiring> fmt::Debug for MultiSet<A, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("⟅")?;
        for (i, (a, r)) in self.w.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a:?}:{r:?}")?;
        }
        f.write_str("⟆")
    }
}

impl<A: Ord + Clone, S: Semiring> MultiSet<A, S> {
    pub fn empty() -> Self {
        MultiSet { w: BTreeMap::new(), _s: PhantomData }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (A, S::Elem)>) -> Self {
        let mut w: BTreeMap<A, S::Elem> = BTreeMap::new();
        for (a, r) in pairs {
            let e = w.entry(a).or_insert_with(S::zero);
            *e = S::add(e, &r);
        }
        w.retain(|_, r| !S::is_zero(r));
        MultiSet { w, _s: PhantomData }
    }

    pub fn weight(&self, a: &A) -> S::Elem {
        self.w.get(a).cloned().unwrap_or_else(S::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&A, &S::Elem)> {
        self.w.iter()
    }

    pub fn total(&self) -> S::Elem {
        self.w.values().fold(S::zero(), |acc, r| S::add(&acc, r))
    }

    pub fn scale(&self, k: &S::Elem) -> Self {
        Self::from_pairs(self.w.iter().map(|(a, r)| (a.clone(), S::mul(k, r))))
    }

    pub fn sum(parts: impl IntoIterator<Item = Self>) -> Self {
        Self::from_pairs(parts.into_iter().flat_map(|m| m.w.into_iter()))
    }

    pub fn has_zero_entry(&self) -> bool {
        self.w.values().any(S::is_zero)
    }
}

pub struct MultiSetM<S>(PhantomData<S>);

#[derive(Clone, Debug)]
pub struct MultiSetBounds<S: Semiring> {
    /// Nonzero weights an entry may take.
    pub weights: Vec<S::Elem>,
    pub max_support: Option<usize>,
}

impl MultiSetBounds<Natural> {
    /// Entries weighted `1..=w`.
    pub fn up_to(w: u64) -> Self {
        MultiSetBounds { weights: (1..=w).collect(), max_support: None }
    }
}

impl<S: Semiring> MultiSetBounds<S> {
    pub fn support(mut self, s: usize) -> Self {
        self.max_support = Some(s);
        self
    }
}

impl<S: Semiring> Monad for MultiSetM<S> {
    type Val<A: Elem> = MultiSet<A, S>;

    fn name() -> String {
        format!("MultiSet({})", S::name())
    }

    fn unit<A: Elem>(a: A) -> MultiSet<A, S> {
        MultiSet::from_pairs([(a, S::one())])
    }

    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &MultiSet<A, S>, f: F) -> MultiSet<B, S> {
        MultiSet::from_pairs(v.w.iter().map(|(a, r)| (f(a), r.clone())))
    }

    fn join<A: Elem>(vv: &MultiSet<MultiSet<A, S>, S>) -> MultiSet<A, S> {
        MultiSet::sum(vv.w.iter().map(|(inner, k)| inner.scale(k)))
    }
}

impl<S: Semiring> Enumerable for MultiSetM<S> {
    type Bounds = MultiSetBounds<S>;

    fn enumerate<A: Elem>(carrier: &[A], b: &MultiSetBounds<S>) -> Vec<MultiSet<A, S>> {
        let max_s = b.max_support.unwrap_or(carrier.len()).min(carrier.len());
        let mut out = Vec::new();
        for sup in subsets_upto(carrier.len(), max_s) {
            let mut acc: Vec<Vec<(A, S::Elem)>> = vec![vec![]];
            for i in &sup {
                acc = acc
                    .into_iter()
                    .flat_map(|p| {
                        b.weights.iter().map(move |w| {
                            let mut q = p.clone();
                            q.push((carrier[*i].clone(), w.clone()));
                            q
                        })
                    })
                    .collect();
            }
            out.extend(acc.into_iter().map(MultiSet::from_pairs));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn join_multiplies_through() {
        let inner: MultiSet<char, Natural> = MultiSet::from_pairs([('a', 2)]);
        let outer = MultiSet::from_pairs([(inner, 3)]);
        assert_eq!(MultiSetM::<Natural>::join(&outer), MultiSet::from_pairs([('a', 6)]));
        assert_eq!(MultiSetM::<Natural>::unit('a'), MultiSet::from_pairs([('a', 1)]));
    }

    #[test]
    fn cid_for_rationals() {
        let xs = [rat(1, 2), rat(2, 3), rat(0, 1)];
        let (r, ms) = Rational::cid(&xs).unwrap();
        for (x, m) in xs.iter().zip(&ms) {
            assert_eq!(*x, r * Rat::from_integer(*m as i64));
        }
    }

    #[test]
    fn enumeration_count() {
        let ms = MultiSetM::<Natural>::enumerate(&[0, 1, 2], &MultiSetBounds::up_to(3));
        assert_eq!(ms.len(), 64);
        assert!(ms.iter().all(|m| !m.has_zero_entry()));
    }
}
