use crate::error::{Error, Result};
use crate::nat::coprod::{CoprodCoords, Side};
use crate::nat::spec::NatTransSpec;

/// Coordinates of a coproduct-shaped spec; hybrid schemes are read on
/// durations `≤ max_duration`.
pub fn coords_of(spec: &NatTransSpec, max_duration: usize) -> Result<CoprodCoords> {
    match spec {
        NatTransSpec::CoprodCoords(c) => Ok(c.clone()),
        NatTransSpec::MaybeCode(m) => Ok(m.coords()),
        NatTransSpec::HybridScheme(h) => h.coords(max_duration),
        other => Err(Error::Unsupported(format!("{other:?} has no coproduct coordinates"))),
    }
}

/// `[i₂, i₁] ∘ s_ij = s_ji` for all indices.
pub fn coord_commutative(c: &CoprodCoords) -> bool {
    let idx = c.shape.indices();
    idx.iter().all(|&i| idx.iter().all(|&j| c.at(i, j).swap() == c.at(j, i)))
}

/// `∇ ∘ s_ii = id`: the diagonal coordinate lies in summand `i` and each
/// point is routed to itself on one side or the other.
pub fn coord_idempotent(c: &CoprodCoords) -> bool {
    c.shape.indices().into_iter().all(|i| {
        let s = c.at(i, i);
        s.summand == i && s.route.iter().enumerate().all(|(t, side)| side.position() == t)
    })
}

/// Whether the nullary summand `u` is a two-sided unit.
pub fn coord_has_unit(c: &CoprodCoords, u: usize) -> Result<bool> {
    if !c.shape.constants().contains(&u) {
        return Err(Error::InvalidValue(format!("summand {u} is not a constant of {:?}", c.shape)));
    }
    Ok(c.shape.indices().into_iter().all(|i| {
        let (l, r) = (c.at(i, u), c.at(u, i));
        let n = c.shape.size(i);
        l.summand == i
            && r.summand == i
            && l.route == (0..n).map(Side::Left).collect::<Vec<_>>()
            && r.route == (0..n).map(Side::Right).collect::<Vec<_>>()
    }))
}

/// False when the functor has no constants at all.
pub fn coord_has_some_unit(c: &CoprodCoords) -> bool {
    c.shape.constants().into_iter().any(|u| coord_has_unit(c, u).unwrap_or(false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nat::coprod::{HybridScheme, Keep, MaybeCode, C2};

    #[test]
    fn maybe_examples() {
        let bkk = MaybeCode { c2: C2::Bot, c10: Keep::Keep, c01: Keep::Keep }.coords();
        assert!(coord_commutative(&bkk));
        assert!(!coord_idempotent(&bkk));
        assert!(coord_has_unit(&bkk, 0).unwrap());
        let left = MaybeCode { c2: C2::Left, c10: Keep::Keep, c01: Keep::Keep }.coords();
        assert!(!coord_commutative(&left));
        assert!(coord_idempotent(&left));
        let ldk = MaybeCode { c2: C2::Left, c10: Keep::Drop, c01: Keep::Keep }.coords();
        assert!(!coord_has_unit(&ldk, 0).unwrap());
        assert!(coord_has_unit(&ldk, 1).is_err());
    }

    #[test]
    fn hybrid_examples() {
        for h in [HybridScheme::LeftProj, HybridScheme::RightProj, HybridScheme::Concat] {
            let c = h.coords(3).unwrap();
            assert!(!coord_commutative(&c));
            assert!(!coord_has_some_unit(&c));
        }
        assert!(coord_idempotent(&HybridScheme::LeftProj.coords(3).unwrap()));
        assert!(!coord_idempotent(&HybridScheme::Concat.coords(3).unwrap()));
    }
}
