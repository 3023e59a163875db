//! Typed descriptions of natural operations and their application.

use super::check::{Family, TableFamily};
use super::coprod::{CoprodCoords, HybridScheme, MaybeCode, Shape};
use super::functor::{FinFunctor, Power};
use crate::error::{Error, Result};
use crate::monad::discrete::DiscreteTraj;
use crate::monad::dist::{Dist, SubDist};
use crate::monad::maybe::Maybe;
use crate::monad::multiset::{MultiSet, Semiring};
use crate::rat::{in_unit_interval, Rat};
use crate::traj::Traj;
use num_traits::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub type WeightFn = Arc<dyn Fn(&[Rat]) -> Vec<Rat> + Send + Sync>;
pub type SubDistFn = Arc<dyn Fn(Rat, Rat) -> (Rat, Rat) + Send + Sync>;

/// A natural operation `Tⁿ → T`, described by the data that classifies it.
#[derive(Clone)]
pub enum NatTransSpec {
    CoprodCoords(CoprodCoords),
    /// `λμ + (1−λ)ν`.
    ConvexCombo(Rat),
    /// `Σᵢ wᵢ·bagᵢ` with `w = φ(total masses)`. Weights are carried as rationals.
    MultisetWeights { arity: usize, phi: WeightFn },
    /// `⋃_{k ∈ φ(J)} U_k`, `J` the set of non-empty arguments; `table[J] = φ(J)` as bitmasks.
    PowersetShrink { arity: usize, table: Vec<u32> },
    /// `(q₁, q₂) = φ(mass μ, mass ν)` weighting the non-failing parts.
    SubDistWeights(SubDistFn),
    HybridScheme(HybridScheme),
    MaybeCode(MaybeCode),
}

impl fmt::Debug for NatTransSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatTransSpec::CoprodCoords(c) => write!(f, "{c:?}"),
            NatTransSpec::ConvexCombo(l) => write!(f, "ConvexCombo({l})"),
            NatTransSpec::MultisetWeights { arity, .. } => write!(f, "MultisetWeights(arity {arity})"),
            NatTransSpec::PowersetShrink { arity, table } => write!(f, "PowersetShrink({arity}, {table:?})"),
            NatTransSpec::SubDistWeights(_) => write!(f, "SubDistWeights"),
            NatTransSpec::HybridScheme(s) => write!(f, "HybridScheme({s:?})"),
            NatTransSpec::MaybeCode(c) => write!(f, "MaybeCode{c}"),
        }
    }
}

impl NatTransSpec {
    pub fn convex(lambda: Rat) -> Result<Self> {
        if !in_unit_interval(&lambda) {
            return Err(Error::InvalidValue(format!("λ = {lambda} is outside [0,1]")));
        }
        Ok(NatTransSpec::ConvexCombo(lambda))
    }

    pub fn multiset_weights(arity: usize, phi: impl Fn(&[Rat]) -> Vec<Rat> + Send + Sync + 'static) -> Self {
        NatTransSpec::MultisetWeights { arity, phi: Arc::new(phi) }
    }

    /// Constant weights, e.g. `(1,1)` for the plain sum.
    pub fn multiset_const(weights: Vec<Rat>) -> Self {
        let n = weights.len();
        Self::multiset_weights(n, move |_| weights.clone())
    }

    pub fn powerset_shrink(arity: usize, table: Vec<u32>) -> Result<Self> {
        if arity > 16 || table.len() != 1 << arity {
            return Err(Error::ArityMismatch { expected: 1 << arity.min(16), got: table.len() });
        }
        for (j, &k) in table.iter().enumerate() {
            if k & !(j as u32) != 0 {
                return Err(Error::InvalidValue(format!("φ({j:#b}) = {k:#b} is not a subset")));
            }
        }
        Ok(NatTransSpec::PowersetShrink { arity, table })
    }

    /// All shrink tables of the given arity.
    pub fn all_shrinks(arity: usize) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = vec![vec![]];
        for j in 0u32..1 << arity {
            let subs: Vec<u32> = (0..=j).filter(|k| k & !j == 0).collect();
            out = out
                .into_iter()
                .flat_map(|p| {
                    subs.iter().map(move |&k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out
    }

    pub fn subdist_weights(phi: impl Fn(Rat, Rat) -> (Rat, Rat) + Send + Sync + 'static) -> Self {
        NatTransSpec::SubDistWeights(Arc::new(phi))
    }

    pub fn arity(&self) -> usize {
        match self {
            NatTransSpec::MultisetWeights { arity, .. } | NatTransSpec::PowersetShrink { arity, .. } => *arity,
            _ => 2,
        }
    }
}

/// Monad values a spec can act on.
pub trait SpecCarrier: Sized {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self>;
}

fn unsupported<T>(spec: &NatTransSpec, carrier: &str) -> Result<T> {
    Err(Error::Unsupported(format!("{spec:?} does not act on {carrier}")))
}

fn check_arity<T>(spec: &NatTransSpec, args: &[T]) -> Result<()> {
    if args.len() != spec.arity() {
        return Err(Error::ArityMismatch { expected: spec.arity(), got: args.len() });
    }
    Ok(())
}

/// Applies `spec` to a tuple of arguments over one carrier.
pub fn apply_nt<V: SpecCarrier>(spec: &NatTransSpec, args: &[V]) -> Result<V> {
    check_arity(spec, args)?;
    V::apply_spec(spec, args)
}

impl<A: Clone> SpecCarrier for Maybe<A> {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self> {
        match spec {
            NatTransSpec::MaybeCode(c) => Ok(c.apply(&args[0], &args[1])),
            NatTransSpec::CoprodCoords(c) if c.shape == Shape::Maybe => c.apply(&args[0], &args[1]),
            _ => unsupported(spec, "Maybe"),
        }
    }
}

impl<A: Clone> SpecCarrier for DiscreteTraj<A> {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self> {
        match spec {
            NatTransSpec::HybridScheme(s) => {
                let d = args[0].duration().max(args[1].duration());
                s.coords(d)?.apply(&args[0], &args[1])
            }
            NatTransSpec::CoprodCoords(c) if matches!(c.shape, Shape::DiscreteTraj { .. }) => {
                c.apply(&args[0], &args[1])
            }
            _ => unsupported(spec, "discrete trajectories"),
        }
    }
}

impl SpecCarrier for Traj {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self> {
        match spec {
            NatTransSpec::HybridScheme(HybridScheme::LeftProj) => Ok(args[0].clone()),
            NatTransSpec::HybridScheme(HybridScheme::RightProj) => Ok(args[1].clone()),
            NatTransSpec::HybridScheme(HybridScheme::Concat) => args[0].concat(&args[1]),
            _ => unsupported(spec, "continuous trajectories"),
        }
    }
}

impl<A: Ord + Clone> SpecCarrier for Dist<A> {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self> {
        match spec {
            NatTransSpec::ConvexCombo(l) => Ok(args[0].convex(*l, &args[1])),
            _ => unsupported(spec, "distributions"),
        }
    }
}

impl<A: Ord + Clone> SpecCarrier for BTreeSet<A> {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self> {
        match spec {
            NatTransSpec::PowersetShrink { table, .. } => {
                let j = args.iter().enumerate().filter(|(_, u)| !u.is_empty()).fold(0u32, |m, (i, _)| m | 1 << i);
                let k = table[j as usize];
                Ok(args.iter().enumerate().filter(|(i, _)| k >> i & 1 == 1).flat_map(|(_, u)| u.iter().cloned()).collect())
            }
            _ => unsupported(spec, "sets"),
        }
    }
}

impl<A: Ord + Clone, S: Semiring> SpecCarrier for MultiSet<A, S> {
    fn apply_spec(spec: &NatTransSpec, args: &[Self]) -> Result<Self> {
        match spec {
            NatTransSpec::MultisetWeights { arity, phi } => {
                let masses: Vec<Rat> = args.iter().map(|b| S::to_rat(&b.total())).collect();
                let w = phi(&masses);
                if w.len() != *arity {
                    return Err(Error::ArityMismatch { expected: *arity, got: w.len() });
                }
                let parts = w
                    .iter()
                    .zip(args)
                    .map(|(wi, b)| {
                        S::from_rat(wi)
                            .map(|k| b.scale(&k))
                            .ok_or_else(|| Error::InvalidValue(format!("weight {wi} is not in {}", S::name())))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(MultiSet::sum(parts))
            }
            _ => unsupported(spec, "multisets"),
        }
    }
}

/// `SubDistWeights` on `D∘Maybe` values.
pub fn apply_subdist<A: Ord + Clone>(spec: &NatTransSpec, mu: &SubDist<A>, nu: &SubDist<A>) -> Result<SubDist<A>> {
    let NatTransSpec::SubDistWeights(phi) = spec else {
        return match spec {
            NatTransSpec::ConvexCombo(l) => Ok(mu.convex(*l, nu)),
            _ => unsupported(spec, "subdistributions"),
        };
    };
    let (q1, q2) = phi(mu.mass(), nu.mass());
    if q1 < Rat::zero() || q2 < Rat::zero() || q1 + q2 > Rat::one() {
        return Err(Error::InvalidValue(format!("φ returned ({q1}, {q2}) outside the simplex")));
    }
    let mut pairs: Vec<(Maybe<A>, Rat)> = vec![];
    for (q, d) in [(q1, mu), (q2, nu)] {
        pairs.extend(d.iter().filter(|(a, _)| a.is_just()).map(|(a, r)| (a.clone(), q * r)));
    }
    let kept: Rat = pairs.iter().map(|p| p.1).sum();
    pairs.push((Maybe::Bottom, Rat::one() - kept));
    Dist::from_pairs(pairs.into_iter().filter(|p| !p.1.is_zero()))
}

/// Whether a tabulated family coincides with `spec` on every entry.
pub fn agrees_with<V>(family: &TableFamily<Vec<V>, V>, spec: &NatTransSpec) -> bool
where
    V: SpecCarrier + Ord + Clone,
{
    family.entries.iter().all(|((_, args), out)| apply_nt(spec, args).is_ok_and(|v| v == *out))
}

/// The shrink table of a natural family `Pⁿ → P`, read off on carrier `n`
/// with argument `i` the singleton `{i}`.
pub fn shrink_table_of<F, A>(arity: usize, family: &A) -> Result<Vec<u32>>
where
    F: FinFunctor<Value = BTreeSet<usize>>,
    A: Family<Power<F>, F> + ?Sized,
{
    (0u32..1 << arity)
        .map(|j| {
            let args: Vec<BTreeSet<usize>> =
                (0..arity).map(|i| if j >> i & 1 == 1 { BTreeSet::from([i]) } else { BTreeSet::new() }).collect();
            let out = family
                .component(arity, &args)
                .ok_or_else(|| Error::Fragment(format!("family undefined on carrier {arity}")))?;
            Ok(out.iter().fold(0u32, |m, &i| m | 1 << i))
        })
        .collect()
}

/// `λ` of a binary family on distributions: the weight `α₂(δ₀, δ₁)` puts on `0`.
pub fn convex_weight_of<F, A>(family: &A) -> Option<Rat>
where
    F: FinFunctor<Value = Dist<usize>>,
    A: Family<Power<F>, F> + ?Sized,
{
    family.component(2, &vec![Dist::point(0), Dist::point(1)]).map(|d| d.weight(&0))
}
