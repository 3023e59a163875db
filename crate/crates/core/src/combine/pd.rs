//! Replay of the argument that `P∘D` carries no monad structure: units are
//! enumerated, then naturality and the unit laws pin `μ` on a single input
//! to an empty set of candidates.

use crate::error::Result;
use crate::monad::dist::{Dist, DistBounds, DistM};
use crate::monad::Enumerable;
use crate::nat::{enumerate_natural, FinFunctor, FinMap, IdF, PdF};
use crate::rat::rat;
use std::collections::BTreeSet;

type PdVal = BTreeSet<Dist<usize>>;

/// One set of admissible values for `μ_X(W)`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub name: String,
    pub admissible: usize,
}

#[derive(Clone, Debug)]
pub struct UnitReplay {
    pub unit: String,
    pub constraints: Vec<Constraint>,
    /// Candidates for `μ_X(W)` left after all constraints.
    pub intersection: usize,
    pub witness: String,
}

#[derive(Clone, Debug)]
pub struct PdReplay {
    /// Natural families `Id → P∘D` found on carriers ≤ 4.
    pub unit_families: Vec<String>,
    pub complete: bool,
    pub units: Vec<UnitReplay>,
}

impl PdReplay {
    pub fn contradiction(&self) -> bool {
        self.complete && self.unit_families.len() == 2 && self.units.len() == 2 && self.units.iter().all(|u| u.intersection == 0)
    }
}

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

fn map(table: [usize; 4]) -> FinMap {
    FinMap { table: table.to_vec(), codomain: 4 }
}

fn set(ds: impl IntoIterator<Item = Dist<usize>>) -> PdVal {
    ds.into_iter().collect()
}

fn half(x: usize, y: usize) -> Dist<usize> {
    Dist::from_pairs([(x, rat(1, 2)), (y, rat(1, 2))]).expect("valid coin")
}

fn show(s: &PdVal) -> String {
    let names = ['a', 'b', 'c', 'd'];
    let parts: Vec<String> = s
        .iter()
        .map(|d| d.iter().map(|(x, w)| format!("{w}·{}", names[*x])).collect::<Vec<_>>().join("+"))
        .collect();
    format!("{{{}}}", parts.join(", "))
}

/// Runs both parts of the replay.
pub fn pd_no_monad_replay() -> Result<PdReplay> {
    let pd = PdF { dist: DistBounds::dividing(2) };
    let en = enumerate_natural(&IdF, &pd, 4, |_, _, _| true, 1_000_000);
    let unit_families: Vec<String> = en
        .families
        .iter()
        .map(|t| match t.get(1, &0) {
            Some(v) if v.is_empty() => "η(x) = ∅".to_string(),
            Some(v) => format!("η(x) = {}", show(v)),
            None => "?".into(),
        })
        .collect();

    // every candidate value of μ_X(W) ∈ P D X, X = {a,b,c,d}
    let universe = pd.values(4);

    // η(x) = {δx}
    let f = map([A, B, A, B]);
    let g = map([A, B, B, A]);
    let h = map([A, A, C, C]);
    let ab = set([Dist::point(A), Dist::point(B)]);
    let ac_half = set([half(A, C)]);
    let forced: [(&str, &FinMap, &PdVal); 3] = [
        ("f: a,c↦a b,d↦b with μ∘η_PD = id", &f, &ab),
        ("g: a,d↦a b,c↦b with μ∘η_PD = id", &g, &ab),
        ("h: a,b↦a c,d↦c with μ∘PDη = id", &h, &ac_half),
    ];
    let mut alive: Vec<bool> = vec![true; universe.len()];
    let mut constraints = Vec::new();
    for (name, m, want) in forced {
        let ok: Vec<bool> = universe.iter().map(|s| pd.map(m, s) == *want).collect();
        constraints.push(Constraint { name: name.into(), admissible: ok.iter().filter(|b| **b).count() });
        alive.iter_mut().zip(&ok).for_each(|(a, o)| *a &= o);
    }
    let fg: Vec<&PdVal> = universe
        .iter()
        .filter(|s| pd.map(&f, s) == ab && pd.map(&g, s) == ab)
        .collect();
    let witness = format!(
        "C_f ∩ C_g has {} members, all sets of point masses ({}); P D h sends each to a set of point masses, never {}",
        fg.len(),
        fg.iter().all(|s| s.iter().all(|d| d.support_len() == 1)),
        show(&ac_half)
    );
    let dirac = UnitReplay {
        unit: "η(x) = {δx}".into(),
        constraints,
        intersection: alive.iter().filter(|b| **b).count(),
        witness,
    };

    // η(x) = ∅: η_PD(U) = ∅ for every U, so μ(∅) must equal every U
    let mut alive = vec![true; universe.len()];
    let mut constraints = Vec::new();
    for u in [set([]), set([Dist::point(A)])] {
        let ok: Vec<bool> = universe.iter().map(|s| *s == u).collect();
        constraints.push(Constraint { name: format!("μ(∅) = μ(η_PD({})) = {}", show(&u), show(&u)), admissible: 1 });
        alive.iter_mut().zip(&ok).for_each(|(a, o)| *a &= o);
    }
    let empty = UnitReplay {
        unit: "η(x) = ∅".into(),
        constraints,
        intersection: alive.iter().filter(|b| **b).count(),
        witness: "μ(∅) would have to be both ∅ and {1·a}".into(),
    };

    // the D fragment really contains ½ weights
    debug_assert!(DistM::enumerate(&[A, C], &DistBounds::dividing(2)).contains(&half(A, C)));
    Ok(PdReplay { unit_families, complete: en.complete, units: vec![dirac, empty] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn replay() {
        let r = pd_no_monad_replay().unwrap();
        assert_eq!(r.unit_families.len(), 2, "{:?}", r.unit_families);
        assert!(r.contradiction(), "{r:#?}");
        assert!(r.units[0].constraints.iter().all(|c| c.admissible > 0));
    }
}
