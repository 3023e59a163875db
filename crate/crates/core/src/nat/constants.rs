//! Constants of a monad: a nullary natural operation `1 → T` is the same as
//! an element of `T∅`.

use crate::error::{Error, Result};
use crate::monad::composite::MaybeT;
use crate::monad::discrete::{DiscreteHybridM, DurationBounds};
use crate::monad::dist::{DistBounds, DistM};
use crate::monad::maybe::MaybeM;
use crate::monad::multiset::{MultiSetBounds, MultiSetM, Natural};
use crate::monad::powerset::{NonEmptyPowerSetM, PowerSetM, SetBounds};
use crate::monad::{constants, induce, Elem, Enumerable, Never};

/// `T∅`, either as a finite list or as a family indexed by duration of
/// which only finitely many members are materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstantsResult<C> {
    Finite(Vec<C>),
    DurationFamily { representatives: Vec<(usize, C)> },
}

impl<C> ConstantsResult<C> {
    pub fn is_empty(&self) -> bool {
        match self {
            ConstantsResult::Finite(v) => v.is_empty(),
            ConstantsResult::DurationFamily { .. } => false,
        }
    }

    pub fn members(&self) -> Vec<&C> {
        match self {
            ConstantsResult::Finite(v) => v.iter().collect(),
            ConstantsResult::DurationFamily { representatives } => representatives.iter().map(|(_, c)| c).collect(),
        }
    }

    pub fn map<D>(self, f: impl Fn(C) -> D) -> ConstantsResult<D> {
        match self {
            ConstantsResult::Finite(v) => ConstantsResult::Finite(v.into_iter().map(f).collect()),
            ConstantsResult::DurationFamily { representatives } => ConstantsResult::DurationFamily {
                representatives: representatives.into_iter().map(|(d, c)| (d, f(c))).collect(),
            },
        }
    }
}

pub fn finite_constants<M: Enumerable>(bounds: &M::Bounds) -> ConstantsResult<M::Val<Never>> {
    ConstantsResult::Finite(constants::<M>(bounds))
}

/// `HM∅ ≅ [0,∞)`: the abort trajectory of each duration, realized on the
/// discrete-time fragment.
pub fn hybrid_maybe_constants(max_duration: usize) -> ConstantsResult<<MaybeT<DiscreteHybridM> as crate::monad::Monad>::Val<Never>> {
    let mut reps: Vec<_> = constants::<MaybeT<DiscreteHybridM>>(&DurationBounds::upto(max_duration))
        .into_iter()
        .map(|c| (c.duration(), c))
        .collect();
    reps.sort();
    ConstantsResult::DurationFamily { representatives: reps }
}

/// The component at carrier `X` of the constant family induced by `c`.
pub fn constant_at<M: Enumerable, A: Elem>(c: &M::Val<Never>) -> M::Val<A> {
    induce::<M, A>(c)
}

/// Monads known by name to the command line.
pub const MONAD_NAMES: &[&str] =
    &["maybe", "dist", "multiset", "powerset", "nonempty-powerset", "hybrid", "dist-maybe", "hybrid-maybe"];

/// Rendered constants of a named monad.
pub fn constants_by_name(name: &str) -> Result<ConstantsResult<String>> {
    fn show<C: std::fmt::Debug>(r: ConstantsResult<C>) -> ConstantsResult<String> {
        r.map(|c| format!("{c:?}"))
    }
    Ok(match name {
        "maybe" => show(finite_constants::<MaybeM>(&())),
        "dist" => show(finite_constants::<DistM>(&DistBounds::dividing(1))),
        "multiset" => show(finite_constants::<MultiSetM<Natural>>(&MultiSetBounds::up_to(3))),
        "powerset" => show(finite_constants::<PowerSetM>(&SetBounds::default())),
        "nonempty-powerset" => show(finite_constants::<NonEmptyPowerSetM>(&SetBounds::default())),
        "hybrid" => show(finite_constants::<DiscreteHybridM>(&DurationBounds::upto(3))),
        "dist-maybe" => show(finite_constants::<MaybeT<DistM>>(&DistBounds::dividing(1))),
        "hybrid-maybe" => show(hybrid_maybe_constants(3)),
        other => return Err(Error::Unsupported(format!("unknown monad `{other}`"))),
    })
}
