use super::coord::{coord_commutative, coord_has_unit, coord_idempotent};
use super::extensional::{check_with, AxiomId, AxiomReport, ExtFragment};
use crate::error::Result;
use crate::monad::dist::{Dist, SubDist};
use crate::monad::maybe::{Maybe, MaybeM};
use crate::monad::powerset::{NonEmptyPowerSetM, PowerSetM, SetBounds};
use crate::monad::{Enumerable, Kernel};
use crate::nat::check::TableFamily;
use crate::nat::coprod::{CoprodCoords, MaybeCode, Shape};
use crate::nat::enumerate::enumerate_natural;
use crate::nat::functor::{MonadF, Power};
use crate::nat::spec::{apply_subdist, NatTransSpec, SpecCarrier};
use crate::rat::{rat, Rat};
use crate::report::SuiteReport;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::sync::Arc;

/// The binary Maybe operations found by search, filtered by the coordinate criteria.
#[derive(Clone, Debug)]
pub struct MaybeClassification {
    pub complete: bool,
    pub codes: Vec<MaybeCode>,
    pub commutative: Vec<MaybeCode>,
    pub idempotent: Vec<MaybeCode>,
    pub both: Vec<MaybeCode>,
    pub unital: Vec<MaybeCode>,
}

pub fn maybe_classification(max_carrier: usize, budget: u64) -> Result<MaybeClassification> {
    let m = MonadF::<MaybeM>::new(());
    let d = Power { inner: m.clone(), arity: 2 };
    let e = enumerate_natural(&d, &m, max_carrier, |_, _, _| true, budget);
    let mut coords: Vec<CoprodCoords> = vec![];
    for f in &e.families {
        coords.push(CoprodCoords::from_family::<MonadF<MaybeM>, _>(Shape::Maybe, f)?);
    }
    let codes: Vec<MaybeCode> = coords.iter().filter_map(MaybeCode::from_coords).collect();
    let pick = |p: &dyn Fn(&CoprodCoords) -> bool| -> Vec<MaybeCode> {
        coords.iter().filter(|c| p(c)).filter_map(MaybeCode::from_coords).collect()
    };
    Ok(MaybeClassification {
        complete: e.complete && codes.len() == e.families.len(),
        commutative: pick(&coord_commutative),
        idempotent: pick(&coord_idempotent),
        both: pick(&|c| coord_commutative(c) && coord_idempotent(c)),
        unital: pick(&|c| coord_has_unit(c, 0).unwrap_or(false)),
        codes,
    })
}

/// `0 ; p = 0` and `p ; 0 = 0` for the constant `zero` (an index into the
/// fragment's constants), in that order. A left-absorption failure accepted by
/// `prefer` is reported in preference to others.
pub fn absorption_suite<M: Enumerable>(
    zero: usize,
    frag: &ExtFragment<M::Bounds>,
    prefer: impl Fn(&[Kernel<M::Val<usize>>]) -> bool,
) -> Result<(AxiomReport, AxiomReport)>
where
    M::Val<usize>: SpecCarrier,
{
    let right = check_with::<M>(None, &AxiomId::RightAbsorb { zero }, frag, |_| true)?;
    let left = check_with::<M>(None, &AxiomId::LeftAbsorb { zero }, frag, prefer)?;
    Ok((right, left))
}

/// A weight map for binary operations on subdistributions.
#[derive(Clone)]
pub struct SubDistCandidate {
    pub name: String,
    pub phi: Arc<dyn Fn(Rat, Rat) -> (Rat, Rat) + Send + Sync>,
}

impl SubDistCandidate {
    pub fn new(name: &str, phi: impl Fn(Rat, Rat) -> (Rat, Rat) + Send + Sync + 'static) -> Self {
        SubDistCandidate { name: name.into(), phi: Arc::new(phi) }
    }

    /// Continuous candidates used by the impossibility suite.
    pub fn defaults() -> Vec<SubDistCandidate> {
        vec![
            SubDistCandidate::new("swap-normalised", |a, b| {
                let s = a + b;
                if s.is_zero() {
                    (rat(1, 2), rat(1, 2))
                } else {
                    (b / s, a / s)
                }
            }),
            SubDistCandidate::new("average", |_, _| (rat(1, 2), rat(1, 2))),
            SubDistCandidate::new("left", |_, _| (Rat::one(), Rat::zero())),
            SubDistCandidate::new("mass-share", |a, b| {
                let s = a + b;
                if s.is_zero() {
                    (rat(1, 2), rat(1, 2))
                } else {
                    (a / s, b / s)
                }
            }),
        ]
    }
}

/// Why a weight map cannot give a unital operation.
#[derive(Clone, Debug, PartialEq)]
pub enum SubDistObstruction {
    /// `α(μₙ, ⊥) = μₙ = α(⊥, μₙ)` breaks at `n`.
    UnitFailure { n: i64, lhs: String, rhs: String },
    /// The unit law holds along both sequences, forcing `φ → (1,0)` and
    /// `φ → (0,1)` as the masses tend to `(0,0)`; no value there is continuous.
    Discontinuity { at_zero: (Rat, Rat) },
}

/// On the one-point carrier, the subdistribution `μₙ = (1/n)·J0 + ((n−1)/n)·⊥`
/// must satisfy `α(μₙ, ⊥) = μₙ = α(⊥, μₙ)` for the failure constant to be a
/// unit. Returns the first `n ≤ max_n` where that breaks, with both sides.
pub fn subdist_unit_failure(c: &SubDistCandidate, max_n: i64) -> Result<Option<(i64, String, String)>> {
    let spec = NatTransSpec::SubDistWeights(c.phi.clone());
    let bot: SubDist<usize> = Dist::point(Maybe::Bottom);
    for n in 2..=max_n {
        let mu: SubDist<usize> =
            Dist::from_pairs([(Maybe::Just(0), rat(1, n)), (Maybe::Bottom, rat(n - 1, n))])?;
        for (a, b) in [(&mu, &bot), (&bot, &mu)] {
            let out = apply_subdist(&spec, a, b)?;
            if out != mu {
                return Ok(Some((n, format!("{out:?}"), format!("{mu:?}"))));
            }
        }
    }
    Ok(None)
}

/// A unit failure if one shows up by `max_n`, otherwise the continuity
/// obstruction at zero mass.
pub fn subdist_obstruction(c: &SubDistCandidate, max_n: i64) -> Result<SubDistObstruction> {
    Ok(match subdist_unit_failure(c, max_n)? {
        Some((n, lhs, rhs)) => SubDistObstruction::UnitFailure { n, lhs, rhs },
        None => SubDistObstruction::Discontinuity { at_zero: (c.phi)(Rat::zero(), Rat::zero()) },
    })
}

fn set_family_props(f: &TableFamily<Vec<BTreeSet<usize>>, BTreeSet<usize>>) -> (bool, bool, bool) {
    let mut comm = true;
    let mut idem = true;
    let mut unit = true;
    for ((n, args), out) in &f.entries {
        let swapped = vec![args[1].clone(), args[0].clone()];
        comm &= f.get(*n, &swapped) == Some(out);
        if args[0] == args[1] {
            idem &= *out == args[0];
        }
        if args[1].is_empty() {
            unit &= *out == args[0];
        }
        if args[0].is_empty() {
            unit &= *out == args[1];
        }
    }
    (comm, idem, unit)
}

/// The negative results: no commutative idempotent Maybe operation, no
/// continuous unital subdistribution operation (checked on candidates), and
/// no unital operation on non-empty sets.
pub fn impossibility_suite(max_carrier: usize) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("impossibility");
    let mc = maybe_classification(max_carrier, 10_000_000)?;
    rep.count("maybe.families", mc.codes.len());
    rep.count("maybe.commutative_and_idempotent", mc.both.len());
    rep.check(mc.complete && mc.codes.len() == 12, || format!("expected 12 Maybe families, got {}", mc.codes.len()));
    rep.check(mc.both.is_empty(), || format!("commutative idempotent Maybe operations: {:?}", mc.both));

    for c in SubDistCandidate::defaults() {
        match subdist_obstruction(&c, 16)? {
            SubDistObstruction::UnitFailure { n, lhs, rhs } => {
                rep.count(&format!("subdist.{}.failure_n", c.name), n);
                rep.exhibit(format!("subdist {}: unit law fails at n={n}: {lhs} ≠ {rhs}", c.name));
            }
            SubDistObstruction::Discontinuity { at_zero: (a, b) } => {
                rep.count(&format!("subdist.{}.failure_n", c.name), "none");
                rep.exhibit(format!(
                    "subdist {}: unit holds for n ≤ 16, forcing limits (1,0) and (0,1) at zero mass; φ(0,0) = ({a},{b})",
                    c.name
                ));
            }
        }
    }

    let ne = MonadF::<NonEmptyPowerSetM>::new(SetBounds::default());
    let e = enumerate_natural(&Power { inner: ne.clone(), arity: 2 }, &ne, max_carrier, |_, _, _| true, 10_000_000);
    let constants = crate::monad::constants::<NonEmptyPowerSetM>(&SetBounds::default()).len();
    let good = e.families.iter().filter(|f| constants > 0 && set_family_props(f) == (true, true, true)).count();
    rep.count("nonempty_powerset.families", e.families.len());
    rep.count("nonempty_powerset.constants", constants);
    rep.count("nonempty_powerset.unital_commutative_idempotent", good);
    rep.check(e.complete && good == 0, || format!("{good} unital commutative idempotent operations on non-empty sets"));

    let p = MonadF::<PowerSetM>::new(SetBounds::default());
    let e = enumerate_natural(&Power { inner: p.clone(), arity: 2 }, &p, max_carrier, |_, _, _| true, 10_000_000);
    let good = e.families.iter().filter(|f| set_family_props(f) == (true, true, true)).count();
    rep.count("powerset.unital_commutative_idempotent", good);
    rep.check(e.complete && good == 1, || format!("expected union only, found {good}"));
    Ok(rep)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_counts() {
        let c = maybe_classification(3, 1_000_000).unwrap();
        assert!(c.complete);
        assert_eq!((c.codes.len(), c.commutative.len(), c.idempotent.len(), c.both.len(), c.unital.len()), (12, 2, 8, 0, 3));
    }

    #[test]
    fn swap_fails_at_two() {
        let c = &SubDistCandidate::defaults()[0];
        assert_eq!(subdist_unit_failure(c, 10).unwrap().unwrap().0, 2);
    }

    #[test]
    fn impossibility_passes() {
        let r = impossibility_suite(3).unwrap();
        assert!(r.passed(), "{r}");
    }
}
