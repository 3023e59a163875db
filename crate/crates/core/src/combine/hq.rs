//! `δ: H∘Q → Q∘H`, `δ(f, d) = {(g, d) | ∀t. g(t) ∈ f(t)}`, on discrete-time
//! trajectories, and the union operation it makes available on `Q∘H`.

use super::law::{check_distributive_law, DistLawFragment, DistLawReport};
use crate::error::{Error, Result};
use crate::monad::composite::DistributiveLaw;
use crate::monad::discrete::{DiscreteHybridM, DiscreteTraj, DurationBounds};
use crate::monad::powerset::{NonEmptyPowerSetM, PowerSetM, SetBounds};
use crate::monad::{Elem, Enumerable};
use std::collections::BTreeSet;
use std::marker::PhantomData;

/// Largest selection set materialised by [`hq_select`].
pub const SELECTION_GUARD: usize = 1 << 20;

/// All pointwise selections `g ∈ f`.
pub fn hq_select<A: Elem>(f: &DiscreteTraj<BTreeSet<A>>) -> BTreeSet<DiscreteTraj<A>> {
    let size = f.values().iter().try_fold(1usize, |acc, s| acc.checked_mul(s.len()));
    assert!(size.is_some_and(|s| s <= SELECTION_GUARD), "selection set too large");
    let mut paths: Vec<Vec<A>> = vec![vec![]];
    for s in f.values() {
        paths = paths
            .into_iter()
            .flat_map(|p| {
                s.iter().map(move |a| {
                    let mut q = p.clone();
                    q.push(a.clone());
                    q
                })
            })
            .collect();
    }
    paths.into_iter().map(|v| DiscreteTraj::new(v).expect("non-empty path")).collect()
}

/// The selection law for a powerset-like outer monad.
pub struct SelectLaw<P>(PhantomData<P>);

impl DistributiveLaw for SelectLaw<NonEmptyPowerSetM> {
    type Outer = NonEmptyPowerSetM;
    type Inner = DiscreteHybridM;

    fn name() -> String {
        "H∘Q → Q∘H".into()
    }
    fn delta<A: Elem>(v: &DiscreteTraj<BTreeSet<A>>) -> BTreeSet<DiscreteTraj<A>> {
        hq_select(v)
    }
}

impl DistributiveLaw for SelectLaw<PowerSetM> {
    type Outer = PowerSetM;
    type Inner = DiscreteHybridM;

    fn name() -> String {
        "H∘P → P∘H".into()
    }
    fn delta<A: Elem>(v: &DiscreteTraj<BTreeSet<A>>) -> BTreeSet<DiscreteTraj<A>> {
        hq_select(v)
    }
}

pub fn hq_fragment(max_carrier: usize, max_duration: usize, nested_duration: usize) -> DistLawFragment<DurationBounds, SetBounds> {
    DistLawFragment {
        max_carrier,
        inner: DurationBounds::upto(max_duration),
        outer: SetBounds::default(),
        inner_nested: DurationBounds::upto(nested_duration),
        outer_nested: SetBounds::default(),
    }
}

/// The four diagrams for `Q`.
pub fn hq_law_report(max_carrier: usize, max_duration: usize, nested_duration: usize) -> Result<DistLawReport> {
    check_distributive_law::<SelectLaw<NonEmptyPowerSetM>>(&hq_fragment(max_carrier, max_duration, nested_duration))
}

/// With the full powerset the law breaks. Returns the failing diagram and an
/// inner trajectory `φ` where `θ(φ) ≠ Pθ(δ φ)`.
pub fn full_powerset_counterexample(
    max_carrier: usize,
    max_duration: usize,
    nested_duration: usize,
) -> Result<(DistLawReport, Option<String>)> {
    let rep = check_distributive_law::<SelectLaw<PowerSetM>>(&hq_fragment(max_carrier, max_duration, nested_duration))?;
    let xs: Vec<usize> = (0..max_carrier).collect();
    let theta = DiscreteHybridM::enumerate(&PowerSetM::enumerate(&xs, &SetBounds::default()), &DurationBounds::upto(nested_duration))
        .into_iter()
        .find_map(|phi| {
            let lhs = phi.start().clone();
            let rhs: BTreeSet<usize> = hq_select(&phi).iter().map(|g| *g.start()).collect();
            (lhs != rhs).then(|| format!("φ = {phi:?}: θ(φ) = {lhs:?}, Pθ(δφ) = {rhs:?}"))
        });
    Ok((rep, theta))
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct QhUnionReport {
    pub values: usize,
    pub commutative: bool,
    pub idempotent: bool,
    pub associative: bool,
    /// A fragment element that is a two-sided unit, if any.
    pub unit: Option<String>,
}

/// `A ∪ B` on `Q H X`.
pub fn qh_union<A: Elem>(a: &BTreeSet<DiscreteTraj<A>>, b: &BTreeSet<DiscreteTraj<A>>) -> BTreeSet<DiscreteTraj<A>> {
    a.union(b).cloned().collect()
}

/// Algebraic properties of the union on `Q H X` over the fragment.
pub fn qh_union_report(carrier: usize, max_duration: usize, max_set: usize) -> Result<QhUnionReport> {
    if carrier == 0 {
        return Err(Error::Fragment("the union check needs a non-empty carrier".into()));
    }
    let xs: Vec<usize> = (0..carrier).collect();
    let trajs = DiscreteHybridM::enumerate(&xs, &DurationBounds::upto(max_duration));
    let vals = NonEmptyPowerSetM::enumerate(&trajs, &SetBounds::size(max_set));
    let mut rep = QhUnionReport { values: vals.len(), commutative: true, idempotent: true, associative: true, unit: None };
    for a in &vals {
        rep.idempotent &= qh_union(a, a) == *a;
        for b in &vals {
            let ab = qh_union(a, b);
            rep.commutative &= ab == qh_union(b, a);
            for c in &vals {
                rep.associative &= qh_union(&ab, c) == qh_union(a, &qh_union(b, c));
            }
        }
    }
    rep.unit = vals.iter().find(|e| vals.iter().all(|a| qh_union(e, a) == *a)).map(|e| format!("{e:?}"));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selection_example() {
        let f = DiscreteTraj::new(vec![BTreeSet::from(['a']), BTreeSet::from(['b', 'c'])]).unwrap();
        let d = hq_select(&f);
        let want: BTreeSet<_> =
            [vec!['a', 'b'], vec!['a', 'c']].into_iter().map(|v| DiscreteTraj::new(v).unwrap()).collect();
        assert_eq!(d, want);
        let single = DiscreteTraj::constant(BTreeSet::from(['z']), 3);
        assert_eq!(hq_select(&single).len(), 1);
    }

    #[test]
    fn laws_small() {
        assert!(hq_law_report(2, 1, 1).unwrap().passed());
        let (rep, theta) = full_powerset_counterexample(1, 1, 1).unwrap();
        assert!(!rep.passed());
        assert!(theta.is_some());
    }

    #[test]
    fn union_props() {
        let r = qh_union_report(2, 1, 2).unwrap();
        assert!(r.commutative && r.idempotent && r.associative);
        assert!(r.unit.is_none());
    }
}
