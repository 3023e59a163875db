//! Powerset `P` and non-empty powerset `Q` (finite subsets).

use super::{subsets_upto, Elem, Enumerable, Monad};
use std::collections::BTreeSet;

pub struct PowerSetM;
pub struct NonEmptyPowerSetM;

#[derive(Clone, Copy, Debug, Default)]
pub struct SetBounds {
    pub max_size: Option<usize>,
}

impl SetBounds {
    pub fn size(s: usize) -> Self {
        SetBounds { max_size: Some(s) }
    }
}

fn union<A: Elem>(vv: &BTreeSet<BTreeSet<A>>) -> BTreeSet<A> {
    vv.iter().flat_map(|s| s.iter().cloned()).collect()
}

fn subsets<A: Elem>(carrier: &[A], b: &SetBounds, nonempty: bool) -> Vec<BTreeSet<A>> {
    subsets_upto(carrier.len(), b.max_size.unwrap_or(carrier.len()))
        .into_iter()
        .filter(|s| !(nonempty && s.is_empty()))
        .map(|s| s.into_iter().map(|i| carrier[i].clone()).collect())
        .collect()
}

impl Monad for PowerSetM {
    type Val<A: Elem> = BTreeSet<A>;

    fn name() -> String {
        "Powerset".into()
    }
    fn unit<A: Elem>(a: A) -> BTreeSet<A> {
        BTreeSet::from([a])
    }
    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &BTreeSet<A>, f: F) -> BTreeSet<B> {
        v.iter().map(f).collect()
    }
    fn join<A: Elem>(vv: &BTreeSet<BTreeSet<A>>) -> BTreeSet<A> {
        union(vv)
    }
}

impl Enumerable for PowerSetM {
    type Bounds = SetBounds;

    fn enumerate<A: Elem>(carrier: &[A], b: &SetBounds) -> Vec<BTreeSet<A>> {
        subsets(carrier, b, false)
    }
}

impl Monad for NonEmptyPowerSetM {
    type Val<A: Elem> = BTreeSet<A>;

    fn name() -> String {
        "NonEmptyPowerset".into()
    }
    fn unit<A: Elem>(a: A) -> BTreeSet<A> {
        BTreeSet::from([a])
    }
    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &BTreeSet<A>, f: F) -> BTreeSet<B> {
        v.iter().map(f).collect()
    }
    fn join<A: Elem>(vv: &BTreeSet<BTreeSet<A>>) -> BTreeSet<A> {
        union(vv)
    }
}

impl Enumerable for NonEmptyPowerSetM {
    type Bounds = SetBounds;

    fn enumerate<A: Elem>(carrier: &[A], b: &SetBounds) -> Vec<BTreeSet<A>> {
        subsets(carrier, b, true)
    }
}
