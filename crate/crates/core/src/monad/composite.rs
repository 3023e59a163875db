//! Composite monads `T∘S` obtained from a distributive law `δ: S T → T S`.

use super::maybe::{lift_carrier, Maybe, MaybeM};
use super::{Elem, Enumerable, Monad};
use std::marker::PhantomData;

/// A distributive law `δ: S∘T → T∘S` of the inner monad `S` over the outer `T`.
pub trait DistributiveLaw {
    type Outer: Monad;
    type Inner: Monad;

    fn name() -> String;

    fn delta<A: Elem>(
        v: &<Self::Inner as Monad>::Val<<Self::Outer as Monad>::Val<A>>,
    ) -> <Self::Outer as Monad>::Val<<Self::Inner as Monad>::Val<A>>;
}

/// `T∘S` with unit `η^T ∘ η^S` and multiplication `Tμ^S ∘ μ^T ∘ TδS`.
pub struct Composite<L>(PhantomData<L>);

type OuterVal<L, A> = <<L as DistributiveLaw>::Outer as Monad>::Val<A>;
type InnerVal<L, A> = <<L as DistributiveLaw>::Inner as Monad>::Val<A>;

impl<L: DistributiveLaw> Monad for Composite<L> {
    type Val<A: Elem> = OuterVal<L, InnerVal<L, A>>;

    fn name() -> String {
        L::name()
    }

    fn unit<A: Elem>(a: A) -> Self::Val<A> {
        L::Outer::unit(L::Inner::unit(a))
    }

    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &Self::Val<A>, f: F) -> Self::Val<B> {
        L::Outer::fmap(v, |s| L::Inner::fmap(s, &f))
    }

    fn join<A: Elem>(vv: &Self::Val<Self::Val<A>>) -> Self::Val<A> {
        let swapped = L::Outer::fmap(vv, |s| L::delta::<InnerVal<L, A>>(s));
        let flat = L::Outer::join(&swapped);
        L::Outer::fmap(&flat, |ss| L::Inner::join(ss))
    }
}

/// `δ_X = [T i₁, η ∘ i₂] : M T X → T M X`, for any monad `T`.
pub struct MaybeLaw<T>(PhantomData<T>);

impl<T: Monad> DistributiveLaw for MaybeLaw<T> {
    type Outer = T;
    type Inner = MaybeM;

    fn name() -> String {
        format!("{}∘Maybe", T::name())
    }

    fn delta<A: Elem>(v: &Maybe<T::Val<A>>) -> T::Val<Maybe<A>> {
        match v {
            Maybe::Just(t) => T::fmap(t, |a| Maybe::Just(a.clone())),
            Maybe::Bottom => T::unit(Maybe::Bottom),
        }
    }
}

/// `T∘Maybe`.
pub type MaybeT<T> = Composite<MaybeLaw<T>>;

impl<T: Enumerable> Enumerable for Composite<MaybeLaw<T>> {
    type Bounds = T::Bounds;

    fn enumerate<A: Elem>(carrier: &[A], b: &T::Bounds) -> Vec<T::Val<Maybe<A>>> {
        T::enumerate(&lift_carrier(carrier), b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::dist::{Dist, DistBounds, DistM};
    use crate::monad::{check_monad_laws, LawFragment};
    use crate::rat::rat;

    #[test]
    fn delta_cases() {
        let mu = Dist::from_pairs([(0, rat(1, 2)), (1, rat(1, 2))]).unwrap();
        let d = MaybeLaw::<DistM>::delta(&Maybe::Just(mu));
        assert_eq!(d, Dist::from_pairs([(Maybe::Just(0), rat(1, 2)), (Maybe::Just(1), rat(1, 2))]).unwrap());
        let b = MaybeLaw::<DistM>::delta::<u8>(&Maybe::Bottom);
        assert_eq!(b, Dist::point(Maybe::Bottom));
    }

    #[test]
    fn dist_maybe_laws_small() {
        let b = DistBounds::dividing(2);
        let frag = LawFragment { max_carrier: 2, unit_bounds: b, assoc_bounds: [b, b.support(2), b.support(2)], guard: 1_000_000 };
        assert!(check_monad_laws::<MaybeT<DistM>>(&frag).unwrap().passed());
    }
}
