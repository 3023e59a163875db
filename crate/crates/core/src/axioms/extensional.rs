//! Axioms checked by evaluating both sides on concrete kernels, with binary
//! operations interpreted pointwise: `⟦σ(p,q)⟧(x) = α(⟦p⟧(x), ⟦q⟧(x))`.

use crate::error::{Error, Result};
use crate::monad::{constants, induce, kleisli_compose, Enumerable, Kernel, Monad};
use crate::nat::spec::{apply_nt, NatTransSpec, SpecCarrier};
use crate::rat::{in_unit_interval, Rat};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomId {
    Commutativity,
    Idempotence,
    /// Index into the monad's constants on the fragment.
    Unit { constant: usize },
    Associativity,
    /// `p ; 0 = 0`
    LeftAbsorb { zero: usize },
    /// `0 ; p = 0`
    RightAbsorb { zero: usize },
    /// `p ; (q σ r) = (p;q) σ (p;r)`
    LeftDistOverSeq,
    /// `(p σ q) ; r = (p;r) σ (q;r)`
    RightDistOverSeq,
    /// `p +λ (q +τ r) = (p +λ' q) +τ' r` with `τ' = λ + (1−λ)τ`, `λ' = λ/τ'`.
    ConvexAssoc4 { tau: Rat },
    /// `p +λ q = q +(1−λ) p`
    ConvexComm6,
}

impl AxiomId {
    pub fn variables(&self) -> usize {
        match self {
            AxiomId::Idempotence | AxiomId::Unit { .. } | AxiomId::LeftAbsorb { .. } | AxiomId::RightAbsorb { .. } => 1,
            AxiomId::Commutativity | AxiomId::ConvexComm6 => 2,
            _ => 3,
        }
    }

    fn needs_spec(&self) -> bool {
        !matches!(self, AxiomId::LeftAbsorb { .. } | AxiomId::RightAbsorb { .. })
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxiomId::Commutativity => write!(f, "p σ q = q σ p"),
            AxiomId::Idempotence => write!(f, "p σ p = p"),
            AxiomId::Unit { constant } => write!(f, "p σ c{constant} = c{constant} σ p = p"),
            AxiomId::Associativity => write!(f, "(p σ q) σ r = p σ (q σ r)"),
            AxiomId::LeftAbsorb { zero } => write!(f, "p ; c{zero} = c{zero}"),
            AxiomId::RightAbsorb { zero } => write!(f, "c{zero} ; p = c{zero}"),
            AxiomId::LeftDistOverSeq => write!(f, "p;(q σ r) = (p;q) σ (p;r)"),
            AxiomId::RightDistOverSeq => write!(f, "(p σ q);r = (p;r) σ (q;r)"),
            AxiomId::ConvexAssoc4 { tau } => write!(f, "p +λ (q +{tau} r) = (p +λ' q) +τ' r"),
            AxiomId::ConvexComm6 => write!(f, "p +λ q = q +(1−λ) p"),
        }
    }
}

/// Kernels `n → T n` for `n ≤ max_carrier` with rows from the bounded
/// enumeration. Exhaustive when a carrier has at most `exhaustive_limit`
/// instances, otherwise `samples` random instances from `seed`.
#[derive(Clone, Debug)]
pub struct ExtFragment<B> {
    pub max_carrier: usize,
    pub bounds: B,
    pub exhaustive_limit: u64,
    pub samples: usize,
    pub seed: u64,
}

impl<B> ExtFragment<B> {
    pub fn new(max_carrier: usize, bounds: B) -> Self {
        ExtFragment { max_carrier, bounds, exhaustive_limit: 1_000_000, samples: 1000, seed: 42 }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomWitness {
    pub carrier: usize,
    pub kernels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl fmt::Display for AxiomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|X|={} kernels {} : lhs {} ≠ rhs {}", self.carrier, self.kernels.join(" ; "), self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub monad: String,
    pub spec: String,
    pub exhaustive: bool,
    pub instances: u64,
    pub witness: Option<AxiomWitness>,
}

impl AxiomReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

type K<M> = Kernel<<M as Monad>::Val<usize>>;

fn op<M: Monad>(spec: &NatTransSpec, args: &[&K<M>]) -> Result<K<M>>
where
    M::Val<usize>: SpecCarrier,
{
    let n = args[0].domain();
    let rows = (0..n)
        .map(|x| apply_nt(spec, &args.iter().map(|k| k.rows[x].clone()).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Kernel::new(args[0].codomain, rows))
}

fn convex_params(spec: &NatTransSpec, axiom: &AxiomId) -> Result<Rat> {
    match spec {
        NatTransSpec::ConvexCombo(l) => Ok(*l),
        _ => Err(Error::Unsupported(format!("{axiom} needs a convex combination, got {spec:?}"))),
    }
}

/// Both sides of `axiom` on the given kernels.
fn sides<M: Enumerable>(
    spec: Option<&NatTransSpec>,
    axiom: &AxiomId,
    ks: &[K<M>],
    consts: &[K<M>],
) -> Result<(K<M>, K<M>)>
where
    M::Val<usize>: SpecCarrier,
{
    let sp = || spec.ok_or_else(|| Error::Unsupported(format!("{axiom} needs an operation")));
    let seq = kleisli_compose::<M>;
    let constant = |c: usize| {
        consts.get(c).cloned().ok_or_else(|| Error::InvalidValue(format!("no constant #{c} on this fragment")))
    };
    Ok(match axiom {
        AxiomId::Commutativity => (op::<M>(sp()?, &[&ks[0], &ks[1]])?, op::<M>(sp()?, &[&ks[1], &ks[0]])?),
        AxiomId::Idempotence => (op::<M>(sp()?, &[&ks[0], &ks[0]])?, ks[0].clone()),
        AxiomId::Unit { constant: c } => {
            let z = constant(*c)?;
            let l = op::<M>(sp()?, &[&ks[0], &z])?;
            let r = op::<M>(sp()?, &[&z, &ks[0]])?;
            if l != ks[0] {
                (l, ks[0].clone())
            } else {
                (r, ks[0].clone())
            }
        }
        AxiomId::Associativity => {
            let s = sp()?;
            let pq = op::<M>(s, &[&ks[0], &ks[1]])?;
            let qr = op::<M>(s, &[&ks[1], &ks[2]])?;
            (op::<M>(s, &[&pq, &ks[2]])?, op::<M>(s, &[&ks[0], &qr])?)
        }
        AxiomId::LeftAbsorb { zero } => {
            let z = constant(*zero)?;
            (seq(&ks[0], &z)?, z)
        }
        AxiomId::RightAbsorb { zero } => {
            let z = constant(*zero)?;
            (seq(&z, &ks[0])?, z)
        }
        AxiomId::LeftDistOverSeq => {
            let s = sp()?;
            let qr = op::<M>(s, &[&ks[1], &ks[2]])?;
            (seq(&ks[0], &qr)?, op::<M>(s, &[&seq(&ks[0], &ks[1])?, &seq(&ks[0], &ks[2])?])?)
        }
        AxiomId::RightDistOverSeq => {
            let s = sp()?;
            let pq = op::<M>(s, &[&ks[0], &ks[1]])?;
            (seq(&pq, &ks[2])?, op::<M>(s, &[&seq(&ks[0], &ks[2])?, &seq(&ks[1], &ks[2])?])?)
        }
        AxiomId::ConvexAssoc4 { tau } => {
            let l = convex_params(sp()?, axiom)?;
            if !in_unit_interval(tau) {
                return Err(Error::InvalidValue(format!("τ = {tau} is outside [0,1]")));
            }
            let tau2 = l + (Rat::one() - l) * tau;
            let l2 = if tau2.is_zero() { Rat::zero() } else { l / tau2 };
            let c = |x: Rat| NatTransSpec::ConvexCombo(x);
            let lhs = op::<M>(&c(l), &[&ks[0], &op::<M>(&c(*tau), &[&ks[1], &ks[2]])?])?;
            let rhs = op::<M>(&c(tau2), &[&op::<M>(&c(l2), &[&ks[0], &ks[1]])?, &ks[2]])?;
            (lhs, rhs)
        }
        AxiomId::ConvexComm6 => {
            let l = convex_params(sp()?, axiom)?;
            let c = |x: Rat| NatTransSpec::ConvexCombo(x);
            (op::<M>(&c(l), &[&ks[0], &ks[1]])?, op::<M>(&c(Rat::one() - l), &[&ks[1], &ks[0]])?)
        }
    })
}

/// Checks `axiom` for the operation `spec` in Kleisli `M`-representations on
/// the fragment. Absorption axioms ignore `spec`.
pub fn check_extensional<M: Enumerable>(
    spec: &NatTransSpec,
    axiom: &AxiomId,
    frag: &ExtFragment<M::Bounds>,
) -> Result<AxiomReport>
where
    M::Val<usize>: SpecCarrier,
{
    check_with::<M>(Some(spec), axiom, frag, |_| true)
}

/// As [`check_extensional`]; among failures the first one accepted by
/// `prefer` is reported, falling back to the first failure.
pub(crate) fn check_with<M: Enumerable>(
    spec: Option<&NatTransSpec>,
    axiom: &AxiomId,
    frag: &ExtFragment<M::Bounds>,
    prefer: impl Fn(&[K<M>]) -> bool,
) -> Result<AxiomReport>
where
    M::Val<usize>: SpecCarrier,
{
    if axiom.needs_spec() && spec.is_none() {
        return Err(Error::Unsupported(format!("{axiom} needs an operation")));
    }
    let mut rep = AxiomReport {
        axiom: axiom.clone(),
        monad: M::name(),
        spec: spec.map(|s| format!("{s:?}")).unwrap_or_else(|| "-".into()),
        exhaustive: true,
        instances: 0,
        witness: None,
    };
    let mut fallback: Option<AxiomWitness> = None;
    let k = axiom.variables();
    for n in 1..=frag.max_carrier {
        let xs: Vec<usize> = (0..n).collect();
        let vals = M::enumerate(&xs, &frag.bounds);
        if vals.is_empty() {
            continue;
        }
        let consts: Vec<K<M>> = constants::<M>(&frag.bounds)
            .iter()
            .map(|c| Kernel::new(n, vec![induce::<M, usize>(c); n]))
            .collect();
        let digits = n * k;
        let total = (vals.len() as u64).checked_pow(digits as u32).filter(|t| *t <= frag.exhaustive_limit);
        let mut rng = ChaCha8Rng::seed_from_u64(frag.seed.wrapping_add(n as u64));
        let count = match total {
            Some(t) => t,
            None => {
                rep.exhaustive = false;
                frag.samples as u64
            }
        };
        for idx in 0..count {
            let pick: Vec<usize> = match total {
                Some(_) => {
                    let mut rest = idx;
                    (0..digits)
                        .map(|_| {
                            let d = (rest % vals.len() as u64) as usize;
                            rest /= vals.len() as u64;
                            d
                        })
                        .collect()
                }
                None => (0..digits).map(|_| rng.gen_range(0..vals.len())).collect(),
            };
            let ks: Vec<K<M>> =
                pick.chunks(n).map(|c| Kernel::new(n, c.iter().map(|&i| vals[i].clone()).collect())).collect();
            rep.instances += 1;
            let (l, r) = sides::<M>(spec, axiom, &ks, &consts)?;
            if l != r {
                let w = AxiomWitness {
                    carrier: n,
                    kernels: ks.iter().map(|k| format!("{:?}", k.rows)).collect(),
                    lhs: format!("{:?}", l.rows),
                    rhs: format!("{:?}", r.rows),
                };
                if prefer(&ks) {
                    rep.witness = Some(w);
                    return Ok(rep);
                }
                fallback.get_or_insert(w);
            }
        }
    }
    rep.witness = fallback;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::dist::{DistBounds, DistM};
    use crate::monad::maybe::MaybeM;
    use crate::nat::coprod::MaybeCode;
    use crate::rat::rat;

    #[test]
    fn convex_commutativity() {
        let frag = ExtFragment::new(2, DistBounds::dividing(2));
        let half = NatTransSpec::ConvexCombo(rat(1, 2));
        assert!(check_extensional::<DistM>(&half, &AxiomId::Commutativity, &frag).unwrap().holds());
        let third = NatTransSpec::ConvexCombo(rat(1, 3));
        let r = check_extensional::<DistM>(&third, &AxiomId::Commutativity, &frag).unwrap();
        assert!(r.witness.is_some());
        assert!(check_extensional::<DistM>(&third, &AxiomId::Idempotence, &frag).unwrap().holds());
    }

    #[test]
    fn maybe_units() {
        let frag = ExtFragment::new(2, ());
        let n = MaybeCode::all()
            .into_iter()
            .filter(|c| {
                check_extensional::<MaybeM>(&NatTransSpec::MaybeCode(*c), &AxiomId::Unit { constant: 0 }, &frag)
                    .unwrap()
                    .holds()
            })
            .count();
        assert_eq!(n, 3);
    }
}
