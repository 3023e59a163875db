//! Kleisli semantics: `⟦skip⟧ = η`, `⟦p;q⟧ = ⟦q⟧ ∘ ⟦p⟧`,
//! `⟦p +_λ q⟧ = λ⟦p⟧ + (1−λ)⟦q⟧`, and in the extended fragment `0`, tests
//! and guarded choice over `D∘Maybe`.

use super::ast::ProbProg;
use super::table::AtomTable;
use crate::combine::{if_then_else, interpret_test, lift_constant, SelectionPolicy};
use crate::error::{Error, Result};
use crate::monad::composite::MaybeT;
use crate::monad::dist::{Dist, DistM};
use crate::monad::maybe::Maybe;
use crate::monad::{kleisli_compose, unit_kernel, Kernel};
use crate::nat::{apply_nt, NatTransSpec};
use num_traits::Zero;

pub type DKernel = Kernel<Dist<usize>>;
pub type SubKernel = Kernel<Dist<Maybe<usize>>>;

/// Pointwise `λ k + (1−λ) l` through the convex operation.
pub fn convex_kernel<V>(spec: &NatTransSpec, k: &Kernel<Dist<V>>, l: &Kernel<Dist<V>>) -> Result<Kernel<Dist<V>>>
where
    V: Ord + Clone + std::fmt::Debug,
    Dist<V>: crate::nat::SpecCarrier,
{
    let rows = k
        .rows
        .iter()
        .zip(&l.rows)
        .map(|(a, b)| apply_nt(spec, &[a.clone(), b.clone()]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Kernel::new(k.codomain, rows))
}

fn total(name: &str, k: &SubKernel) -> Result<DKernel> {
    let rows = k
        .rows
        .iter()
        .map(|d| {
            if !d.weight(&Maybe::Bottom).is_zero() {
                return Err(Error::Fragment(format!("atom `{name}` can fail; use the extended fragment")));
            }
            Ok(d.map(|y| match y {
                Maybe::Just(y) => *y,
                Maybe::Bottom => unreachable!(),
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Kernel::new(k.codomain, rows))
}

/// `⟦p⟧ : X → D X` for base-fragment programs.
pub fn denote(p: &ProbProg, t: &AtomTable) -> Result<DKernel> {
    match p {
        ProbProg::Atom(a) => total(a, t.atom(a)?),
        ProbProg::Skip => Ok(unit_kernel::<DistM>(t.len())),
        ProbProg::Seq(a, b) => kleisli_compose::<DistM>(&denote(a, t)?, &denote(b, t)?),
        ProbProg::Convex(l, a, b) => convex_kernel(&NatTransSpec::ConvexCombo(*l), &denote(a, t)?, &denote(b, t)?),
        ProbProg::Zero => Err(Error::Fragment("`0` has no semantics over D: D has no constants".into())),
        ProbProg::Ite(..) | ProbProg::Test(_) => {
            Err(Error::Fragment("tests and if-then-else need the extended fragment".into()))
        }
    }
}

/// `⟦p⟧ : X → D(X + 1)` for the extended fragment.
pub fn denote_plus(p: &ProbProg, t: &AtomTable, policy: SelectionPolicy) -> Result<SubKernel> {
    type DM = MaybeT<DistM>;
    match p {
        ProbProg::Atom(a) => Ok(t.atom(a)?.clone()),
        ProbProg::Skip => Ok(unit_kernel::<DM>(t.len())),
        ProbProg::Zero => Ok(Kernel::new(t.len(), vec![lift_constant::<DistM, usize>(); t.len()])),
        ProbProg::Seq(a, b) => kleisli_compose::<DM>(&denote_plus(a, t, policy)?, &denote_plus(b, t, policy)?),
        ProbProg::Convex(l, a, b) => {
            convex_kernel(&NatTransSpec::ConvexCombo(*l), &denote_plus(a, t, policy)?, &denote_plus(b, t, policy)?)
        }
        ProbProg::Test(b) => Ok(interpret_test::<DistM>(t.test(b)?)),
        ProbProg::Ite(b, p, q) => {
            if_then_else::<DistM>(t.test(b)?, &denote_plus(p, t, policy)?, &denote_plus(q, t, policy)?, policy)
        }
    }
}

pub fn run_prob(p: &ProbProg, t: &AtomTable, x: usize) -> Result<Dist<usize>> {
    if x >= t.len() {
        return Err(Error::UnknownState(x.to_string()));
    }
    Ok(denote(p, t)?.rows.swap_remove(x))
}

pub fn run_prob_plus(p: &ProbProg, t: &AtomTable, x: usize) -> Result<Dist<Maybe<usize>>> {
    if x >= t.len() {
        return Err(Error::UnknownState(x.to_string()));
    }
    Ok(denote_plus(p, t, SelectionPolicy::default())?.rows.swap_remove(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combine::Test;
    use crate::prob::parse_prob;
    use crate::rat::{rat, Rat};
    use num_traits::One;

    fn intro() -> AtomTable {
        let mut t = AtomTable::new(vec!["0".into(), "1".into(), "2".into()]).unwrap();
        t.add_bernoulli("bern3", rat(3, 10)).unwrap();
        t.add_bernoulli("bern6", rat(6, 10)).unwrap();
        t.add_test("b1", Test::new(vec![true, false, false])).unwrap();
        t.add_test("b2", Test::new(vec![false, true, false])).unwrap();
        t
    }

    #[test]
    fn intro_program() {
        let t = intro();
        let p = parse_prob("if b1 then bern3 else if b2 then bern6 else 0").unwrap();
        let d = run_prob_plus(&p, &t, 0).unwrap();
        assert_eq!(d, Dist::from_pairs([(Maybe::Just(1), rat(3, 10)), (Maybe::Just(0), rat(7, 10))]).unwrap());
        assert_eq!(run_prob_plus(&p, &t, 2).unwrap(), Dist::point(Maybe::Bottom));
        assert!(matches!(run_prob(&p, &t, 0), Err(Error::Fragment(_))));
    }

    #[test]
    fn base_examples() {
        let t = intro();
        assert_eq!(run_prob(&ProbProg::Skip, &t, 2).unwrap(), Dist::point(2));
        let aa = parse_prob("bern3 +[1/2] bern3").unwrap();
        assert_eq!(denote(&aa, &t).unwrap(), denote(&ProbProg::atom("bern3"), &t).unwrap());
        let l = parse_prob("bern3 +[1/2] (bern6 +[1/2] skip)").unwrap();
        let r = parse_prob("(bern3 +[2/3] bern6) +[3/4] skip").unwrap();
        assert_eq!(denote(&l, &t).unwrap(), denote(&r, &t).unwrap());
        for x in 0..3 {
            assert_eq!(run_prob(&l, &t, x).unwrap().total(), Rat::one());
        }
        assert!(matches!(run_prob(&ProbProg::Zero, &t, 0), Err(Error::Fragment(_))));
    }

    #[test]
    fn zero_absorbs_on_the_left() {
        let t = intro();
        let z = denote_plus(&ProbProg::Zero, &t, SelectionPolicy::default()).unwrap();
        for p in ["bern3", "bern6 +[1/3] skip", "if b1 then bern3 else 0"] {
            let zp = ProbProg::seq(ProbProg::Zero, parse_prob(p).unwrap());
            assert_eq!(denote_plus(&zp, &t, SelectionPolicy::default()).unwrap(), z);
        }
    }
}
