//! Abstracting then interpreting: for a map `q: X → Y` and atom
//! interpretations `ρ` on `X` and `ρ'` on `Y` with `Tq ∘ ρ(a) = ρ'(a) ∘ q`,
//! the same square commutes for every composite program.

use crate::error::{Error, Result};
use crate::monad::dist::DistM;
use crate::monad::Monad;
use crate::nat::FinMap;
use crate::prob::sem::DKernel;
use crate::prob::{denote, AtomTable, ProbProg};
use serde::Serialize;

#[derive(Clone, Debug, Default, Serialize)]
pub struct AbstractionReport {
    pub atoms_checked: usize,
    pub programs_checked: usize,
    /// Atoms where the square fails; a broken premise, not a broken law.
    pub premise_failures: Vec<String>,
    /// Composite programs where the square fails.
    pub law_failures: Vec<String>,
}

impl AbstractionReport {
    /// The law holds on every program whose atoms satisfy the premise.
    pub fn holds(&self) -> bool {
        self.premise_failures.is_empty() && self.law_failures.is_empty()
    }
}

fn square(q: &FinMap, k: &DKernel, k2: &DKernel) -> Option<String> {
    (0..q.domain()).find_map(|x| {
        let l = DistM::fmap(k.at(x), |y| q.apply(*y));
        let r = k2.at(q.apply(x));
        (l != *r).then(|| format!("x = {x}: Tq(ρ(x)) = {l:?}, ρ'(q(x)) = {r:?}"))
    })
}

/// Checks the atomic premise, then `Tq ∘ ⟦p⟧ = ⟦p⟧' ∘ q` for each program.
pub fn check_abstraction(q: &FinMap, rho: &AtomTable, rho2: &AtomTable, programs: &[ProbProg]) -> Result<AbstractionReport> {
    if q.domain() != rho.len() || q.codomain != rho2.len() {
        return Err(Error::CarrierMismatch(format!(
            "q: {} → {} but the tables have {} and {} states",
            q.domain(),
            q.codomain,
            rho.len(),
            rho2.len()
        )));
    }
    let mut rep = AbstractionReport::default();
    for a in rho.atoms.keys() {
        let p = ProbProg::atom(a);
        rep.atoms_checked += 1;
        if let Some(w) = square(q, &denote(&p, rho)?, &denote(&p, rho2)?) {
            rep.premise_failures.push(format!("atom {a}: {w}"));
        }
    }
    for p in programs {
        rep.programs_checked += 1;
        if let Some(w) = square(q, &denote(p, rho)?, &denote(p, rho2)?) {
            rep.law_failures.push(format!("{p}: {w}"));
        }
    }
    Ok(rep)
}

/// Programs of depth ≤ `depth` over `atoms` and `skip`, built with `;` and
/// the given convex weights.
pub fn programs_upto(atoms: &[String], weights: &[crate::rat::Rat], depth: usize) -> Vec<ProbProg> {
    let mut by_depth: Vec<Vec<ProbProg>> = vec![vec![], std::iter::once(ProbProg::Skip).chain(atoms.iter().map(|a| ProbProg::atom(a))).collect()];
    for d in 2..=depth {
        let lower: Vec<ProbProg> = by_depth[1..d].iter().flatten().cloned().collect();
        let mut next = vec![];
        for p in &lower {
            for q in &lower {
                if p.depth().max(q.depth()) != d - 1 {
                    continue;
                }
                next.push(ProbProg::seq(p.clone(), q.clone()));
                for w in weights {
                    next.push(ProbProg::convex(*w, p.clone(), q.clone()));
                }
            }
        }
        by_depth.push(next);
    }
    by_depth.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::dist::Dist;
    use crate::monad::Kernel;
    use crate::rat::rat;

    fn parity() -> (FinMap, AtomTable, AtomTable) {
        let q = FinMap { table: vec![0, 1, 0, 1], codomain: 2 };
        let mut x = AtomTable::new((0..4).map(|i| i.to_string()).collect()).unwrap();
        let mut y = AtomTable::new(vec!["even".into(), "odd".into()]).unwrap();
        // step: +1 or +2 mod 4 with equal odds; flips parity with probability 1/2
        let step = Kernel::new(4, (0..4).map(|i| Dist::from_pairs([((i + 1) % 4, rat(1, 2)), ((i + 2) % 4, rat(1, 2))]).unwrap()).collect());
        let step2 = Kernel::new(2, (0..2).map(|i| Dist::from_pairs([((i + 1) % 2, rat(1, 2)), (i, rat(1, 2))]).unwrap()).collect());
        x.add_total_atom("step", &step).unwrap();
        y.add_total_atom("step", &step2).unwrap();
        (q, x, y)
    }

    #[test]
    fn parity_and_broken_premise() {
        let (q, x, mut y) = parity();
        let progs = programs_upto(&["step".into()], &[rat(1, 3)], 3);
        let rep = check_abstraction(&q, &x, &y, &progs).unwrap();
        assert!(rep.holds(), "{rep:?}");
        let id = FinMap { table: vec![0, 1, 2, 3], codomain: 4 };
        assert!(check_abstraction(&id, &x, &x, &progs).unwrap().holds());
        y.add_total_atom("step", &Kernel::new(2, vec![Dist::point(0), Dist::point(1)])).unwrap();
        let bad = check_abstraction(&q, &x, &y, &progs).unwrap();
        assert_eq!(bad.premise_failures.len(), 1);
        assert!(!bad.law_failures.is_empty());
    }
}
