//! The four coherence diagrams of a distributive law `δ: S∘T → T∘S`.

use crate::error::Result;
use crate::monad::composite::DistributiveLaw;
use crate::monad::{Enumerable, LawWitness, Monad};

/// Values of `S X` and `T X` come from `inner` / `outer` bounds; the nested
/// values `S T T X` and `S S T X` reuse them level by level.
#[derive(Clone, Debug)]
pub struct DistLawFragment<SB, TB> {
    pub max_carrier: usize,
    pub inner: SB,
    pub outer: TB,
    /// Bounds for the nested levels, which would otherwise explode.
    pub inner_nested: SB,
    pub outer_nested: TB,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DistLawReport {
    pub law: String,
    /// Values checked per diagram, in the order: unit of T, unit of S,
    /// multiplication of T, multiplication of S.
    pub checked: [usize; 4],
    pub witness: Option<LawWitness>,
}

impl DistLawReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn w<I: std::fmt::Debug, V: std::fmt::Debug>(law: &'static str, n: usize, i: &I, l: &V, r: &V) -> LawWitness {
    LawWitness { law, carrier: n, input: format!("{i:?}"), lhs: format!("{l:?}"), rhs: format!("{r:?}") }
}

/// Checks, on every fragment value:
/// `δ ∘ Sη^T = η^T_S`, `δ ∘ η^S_T = Tη^S`,
/// `δ ∘ Sμ^T = μ^T_S ∘ Tδ ∘ δ_T` and `δ ∘ μ^S_T = Tμ^S ∘ δ_S ∘ Sδ`.
pub fn check_distributive_law<L>(
    frag: &DistLawFragment<<L::Inner as Enumerable>::Bounds, <L::Outer as Enumerable>::Bounds>,
) -> Result<DistLawReport>
where
    L: DistributiveLaw,
    L::Inner: Enumerable,
    L::Outer: Enumerable,
{
    type S<L> = <L as DistributiveLaw>::Inner;
    type T<L> = <L as DistributiveLaw>::Outer;
    let mut rep = DistLawReport { law: L::name(), checked: [0; 4], witness: None };
    for n in 0..=frag.max_carrier {
        let xs: Vec<usize> = (0..n).collect();

        for s in S::<L>::enumerate(&xs, &frag.inner) {
            rep.checked[0] += 1;
            let l = L::delta(&S::<L>::fmap(&s, |x| T::<L>::unit(*x)));
            let r = T::<L>::unit(s.clone());
            if l != r {
                rep.witness = Some(w("δ∘Sη = ηS", n, &s, &l, &r));
                return Ok(rep);
            }
        }

        for t in T::<L>::enumerate(&xs, &frag.outer) {
            rep.checked[1] += 1;
            let l = L::delta(&S::<L>::unit(t.clone()));
            let r = T::<L>::fmap(&t, |x| S::<L>::unit(*x));
            if l != r {
                rep.witness = Some(w("δ∘ηT = Tη", n, &t, &l, &r));
                return Ok(rep);
            }
        }

        let tx = T::<L>::enumerate(&xs, &frag.outer_nested);
        let ttx = T::<L>::enumerate(&tx, &frag.outer_nested);
        for v in S::<L>::enumerate(&ttx, &frag.inner_nested) {
            rep.checked[2] += 1;
            let l = L::delta(&S::<L>::fmap(&v, T::<L>::join));
            let swapped = L::delta(&v);
            let r = T::<L>::join(&T::<L>::fmap(&swapped, |st| L::delta(st)));
            if l != r {
                rep.witness = Some(w("δ∘Sμ = μS∘Tδ∘δT", n, &v, &l, &r));
                return Ok(rep);
            }
        }

        let tx = T::<L>::enumerate(&xs, &frag.outer_nested);
        let stx = S::<L>::enumerate(&tx, &frag.inner_nested);
        for v in S::<L>::enumerate(&stx, &frag.inner_nested) {
            rep.checked[3] += 1;
            let l = L::delta(&S::<L>::join(&v));
            let inner = S::<L>::fmap(&v, |st| L::delta(st));
            let r = T::<L>::fmap(&L::delta(&inner), S::<L>::join);
            if l != r {
                rep.witness = Some(w("δ∘μT = Tμ∘δS∘Sδ", n, &v, &l, &r));
                return Ok(rep);
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::composite::MaybeLaw;
    use crate::monad::dist::{DistBounds, DistM};

    #[test]
    fn maybe_over_dist() {
        let b = DistBounds::dividing(2);
        let frag = DistLawFragment { max_carrier: 2, inner: (), outer: b, inner_nested: (), outer_nested: b.support(2) };
        let r = check_distributive_law::<MaybeLaw<DistM>>(&frag).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.checked.iter().all(|c| *c > 0));
    }
}
