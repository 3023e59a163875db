//! Operations on `T∘Maybe` lifted through the strength of `T`, tests, and
//! guarded choice.

use crate::error::{Error, Result};
use crate::monad::composite::MaybeT;
use crate::monad::maybe::Maybe;
use crate::monad::{kleisli_compose, Elem, Kernel, Monad};
use crate::nat::coprod::{Keep, MaybeCode, C2};
use crate::nat::spec::{apply_nt, NatTransSpec};
use serde::{Deserialize, Serialize};
use std::fmt;

/// `(TS)ⁿ → T(Sⁿ) → TS` with `S = Maybe`: the strength sequences the
/// arguments left to right, then the inner operation acts pointwise.
pub fn lift_nt<T: Monad, A: Elem>(inner: &NatTransSpec, args: &[T::Val<Maybe<A>>]) -> Result<T::Val<Maybe<A>>> {
    if args.is_empty() {
        return Ok(lift_constant::<T, A>());
    }
    if args.len() != inner.arity() {
        return Err(Error::ArityMismatch { expected: inner.arity(), got: args.len() });
    }
    let probe: Vec<Maybe<A>> = vec![Maybe::Bottom; args.len()];
    apply_nt(inner, &probe)?;
    let mut acc: T::Val<Vec<Maybe<A>>> = T::fmap(&args[0], |a| vec![a.clone()]);
    for arg in &args[1..] {
        acc = T::bind(&acc, |prefix| {
            T::fmap(arg, |b| {
                let mut v = prefix.clone();
                v.push(b.clone());
                v
            })
        });
    }
    Ok(T::fmap(&acc, |tuple| apply_nt(inner, tuple).expect("spec accepted the probe tuple")))
}

/// `1 → T1 → TM`: failure, lifted.
pub fn lift_constant<T: Monad, A: Elem>() -> T::Val<Maybe<A>> {
    T::unit(Maybe::Bottom)
}

/// A predicate on the carrier `{0..n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Test {
    pub truth: Vec<bool>,
}

impl fmt::Debug for Test {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.truth.iter().map(|b| if *b { '1' } else { '0' }).collect();
        write!(f, "b[{s}]")
    }
}

impl Test {
    pub fn new(truth: Vec<bool>) -> Self {
        Test { truth }
    }

    pub fn from_fn(n: usize, p: impl Fn(usize) -> bool) -> Self {
        Test { truth: (0..n).map(p).collect() }
    }

    pub fn always(n: usize) -> Self {
        Test::from_fn(n, |_| true)
    }

    pub fn never(n: usize) -> Self {
        Test::from_fn(n, |_| false)
    }

    pub fn carrier(&self) -> usize {
        self.truth.len()
    }

    pub fn holds(&self, x: usize) -> bool {
        self.truth[x]
    }

    pub fn not(&self) -> Test {
        Test { truth: self.truth.iter().map(|b| !b).collect() }
    }

    /// `a ; b` on tests.
    pub fn and(&self, other: &Test) -> Test {
        Test { truth: self.truth.iter().zip(&other.truth).map(|(a, b)| *a && *b).collect() }
    }

    /// Every test on `{0..n}`.
    pub fn all(n: usize) -> Vec<Test> {
        (0u32..1 << n).map(|m| Test::from_fn(n, |x| m >> x & 1 == 1)).collect()
    }
}

/// `x ↦ η(Just x)` where the test holds, `η(⊥)` elsewhere.
pub fn interpret_test<T: Monad>(b: &Test) -> Kernel<T::Val<Maybe<usize>>> {
    let n = b.carrier();
    Kernel::new(n, (0..n).map(|x| T::unit(if b.holds(x) { Maybe::Just(x) } else { Maybe::Bottom })).collect())
}

/// Which of the three unital Maybe operations resolves guarded choice.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SelectionPolicy {
    #[default]
    LeftBiased,
    RightBiased,
    BottomOnClash,
}

impl SelectionPolicy {
    pub const ALL: [SelectionPolicy; 3] =
        [SelectionPolicy::LeftBiased, SelectionPolicy::RightBiased, SelectionPolicy::BottomOnClash];

    pub fn code(self) -> MaybeCode {
        let c2 = match self {
            SelectionPolicy::LeftBiased => C2::Left,
            SelectionPolicy::RightBiased => C2::Right,
            SelectionPolicy::BottomOnClash => C2::Bot,
        };
        MaybeCode { c2, c10: Keep::Keep, c01: Keep::Keep }
    }
}

/// `⟦p +_b q⟧ = Tα ∘ ⊗ ∘ ⟨⟦b;p⟧, ⟦¬b;q⟧⟩`.
pub fn if_then_else<T: Monad>(
    b: &Test,
    p: &Kernel<T::Val<Maybe<usize>>>,
    q: &Kernel<T::Val<Maybe<usize>>>,
    policy: SelectionPolicy,
) -> Result<Kernel<T::Val<Maybe<usize>>>> {
    if p.domain() != b.carrier() || q.domain() != b.carrier() || p.codomain != q.codomain {
        return Err(Error::CarrierMismatch(format!(
            "test on {} points, branches {}→{} and {}→{}",
            b.carrier(),
            p.domain(),
            p.codomain,
            q.domain(),
            q.codomain
        )));
    }
    let bp = kleisli_compose::<MaybeT<T>>(&interpret_test::<T>(b), p)?;
    let nq = kleisli_compose::<MaybeT<T>>(&interpret_test::<T>(&b.not()), q)?;
    let alpha = NatTransSpec::MaybeCode(policy.code());
    let rows = bp
        .rows
        .iter()
        .zip(&nq.rows)
        .map(|(l, r)| lift_nt::<T, usize>(&alpha, &[l.clone(), r.clone()]))
        .collect::<Result<Vec<_>>>()?;
    Ok(Kernel::new(p.codomain, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::dist::{coin, Dist, DistM};
    use crate::rat::rat;

    #[test]
    fn lifted_left_choice() {
        let spec = NatTransSpec::MaybeCode(SelectionPolicy::LeftBiased.code());
        let out = lift_nt::<DistM, char>(&spec, &[Dist::point(Maybe::Just('a')), Dist::point(Maybe::Bottom)]).unwrap();
        assert_eq!(out, Dist::point(Maybe::Just('a')));
        assert_eq!(lift_constant::<DistM, char>(), Dist::point(Maybe::Bottom));
    }

    #[test]
    fn branch_selection() {
        let n = 6;
        let even = Test::from_fn(n, |x| x % 2 == 0);
        let p = Kernel::new(n, (0..n).map(|x| Dist::point(Maybe::Just((x + 1) % n))).collect());
        let q = Kernel::new(
            n,
            (0..n).map(|x| coin(rat(1, 2), Maybe::Just(x), Maybe::Just((x + 2) % n)).unwrap()).collect(),
        );
        let k = if_then_else::<DistM>(&even, &p, &q, SelectionPolicy::LeftBiased).unwrap();
        assert_eq!(k.rows[2], Dist::point(Maybe::Just(3)));
        assert_eq!(k.rows[3], coin(rat(1, 2), Maybe::Just(3), Maybe::Just(5)).unwrap());
    }

    #[test]
    fn test_conjunction() {
        let n = 6;
        let even = Test::from_fn(n, |x| x % 2 == 0);
        let small = Test::from_fn(n, |x| x < 4);
        let k = kleisli_compose::<MaybeT<DistM>>(&interpret_test::<DistM>(&even), &interpret_test::<DistM>(&small))
            .unwrap();
        assert_eq!(k.rows[2], Dist::point(Maybe::Just(2)));
        assert_eq!(k.rows[3], Dist::point(Maybe::Bottom));
    }
}
