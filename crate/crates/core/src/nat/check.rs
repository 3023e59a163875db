//! Brute-force naturality checks on finite carriers.

use super::functor::{all_maps, FinFunctor, FinMap};
use crate::error::{Error, Result};
use std::collections::BTreeMap;


/// A carrier-indexed family `α_n : D(n) → C(n)`; `None` where undefined.
pub trait Family<D: FinFunctor, C: FinFunctor> {
    fn component(&self, n: usize, arg: &D::Value) -> Option<C::Value>;
}

impl<D, C, F> Family<D, C> for F
where
    D: FinFunctor,
    C: FinFunctor,
    F: Fn(usize, &D::Value) -> Option<C::Value>,
{
    fn component(&self, n: usize, arg: &D::Value) -> Option<C::Value> {
        self(n, arg)
    }
}

/// A family given by explicit tables on a finite fragment.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct TableFamily<DV: Ord, CV> {
    pub entries: BTreeMap<(usize, DV), CV>,
}

impl<DV: Ord + Clone, CV: Clone> TableFamily<DV, CV> {
    pub fn get(&self, n: usize, arg: &DV) -> Option<&CV> {
        self.entries.get(&(n, arg.clone()))
    }
}

impl<D: FinFunctor, C: FinFunctor> Family<D, C> for TableFamily<D::Value, C::Value> {
    fn component(&self, n: usize, arg: &D::Value) -> Option<C::Value> {
        self.get(n, arg).cloned()
    }
}

/// A violated naturality square `α_m ∘ Df ≠ Cf ∘ α_n` for `f : n → m`.
#[derive(Clone, Debug, PartialEq)]
pub struct Square {
    pub from: usize,
    pub to: usize,
    pub map: Vec<usize>,
    pub arg: String,
    /// `α_m(Df(arg))`
    pub lhs: String,
    /// `Cf(α_n(arg))`
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct NaturalityReport {
    pub squares: usize,
    pub counterexample: Option<Square>,
}

impl NaturalityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks every square for all maps between carriers `≤ max_carrier` and all
/// fragment values. Squares whose corners are undefined are skipped.
pub fn check_naturality<D, C, A>(dom: &D, cod: &C, alpha: &A, max_carrier: usize, guard: usize) -> Result<NaturalityReport>
where
    D: FinFunctor,
    C: FinFunctor,
    A: Family<D, C> + ?Sized,
{
    let mut squares = 0usize;
    for n in 0..=max_carrier {
        let vals = dom.values(n);
        for m in 0..=max_carrier {
            for f in all_maps(n, m) {
                for arg in &vals {
                    squares += 1;
                    if squares > guard {
                        return Err(Error::Guard(format!("more than {guard} naturality squares")));
                    }
                    if let Some(sq) = square(dom, cod, alpha, n, &f, arg) {
                        return Ok(NaturalityReport { squares, counterexample: Some(sq) });
                    }
                }
            }
        }
    }
    Ok(NaturalityReport { squares, counterexample: None })
}

fn square<D, C, A>(dom: &D, cod: &C, alpha: &A, n: usize, f: &FinMap, arg: &D::Value) -> Option<Square>
where
    D: FinFunctor,
    C: FinFunctor,
    A: Family<D, C> + ?Sized,
{
    let a_n = alpha.component(n, arg)?;
    let moved = dom.map(f, arg);
    let lhs = alpha.component(f.codomain, &moved)?;
    let rhs = cod.map(f, &a_n);
    (lhs != rhs).then(|| Square {
        from: n,
        to: f.codomain,
        map: f.table.clone(),
        arg: format!("{arg:?}"),
        lhs: format!("{lhs:?}"),
        rhs: format!("{rhs:?}"),
    })
}

/// Tabulates a family on the fragment.
pub fn tabulate<D, C, A>(dom: &D, alpha: &A, max_carrier: usize) -> TableFamily<D::Value, C::Value>
where
    D: FinFunctor,
    C: FinFunctor,
    A: Family<D, C> + ?Sized,
{
    let mut entries = BTreeMap::new();
    for n in 0..=max_carrier {
        for arg in dom.values(n) {
            if let Some(v) = alpha.component(n, &arg) {
                entries.insert((n, arg), v);
            }
        }
    }
    TableFamily { entries }
}

