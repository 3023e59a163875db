//! The Maybe (exception) monad `M X = X + 1`.

use super::{Elem, Enumerable, Monad};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Maybe<A> {
    Bottom,
    Just(A),
}

impl<A> Maybe<A> {
    pub fn map<B>(&self, f: impl FnOnce(&A) -> B) -> Maybe<B> {
        match self {
            Maybe::Just(a) => Maybe::Just(f(a)),
            Maybe::Bottom => Maybe::Bottom,
        }
    }

    pub fn is_just(&self) -> bool {
        matches!(self, Maybe::Just(_))
    }

    pub fn as_option(&self) -> Option<&A> {
        match self {
            Maybe::Just(a) => Some(a),
            Maybe::Bottom => None,
        }
    }
}

impl<A: fmt::Debug> fmt::Debug for Maybe<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Maybe::Just(a) => write!(f, "J{a:?}"),
            Maybe::Bottom => write!(f, "⊥"),
        }
    }
}

pub struct MaybeM;

impl Monad for MaybeM {
    type Val<A: Elem> = Maybe<A>;

    fn name() -> String {
        "Maybe".into()
    }

    fn unit<A: Elem>(a: A) -> Maybe<A> {
        Maybe::Just(a)
    }

    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &Maybe<A>, f: F) -> Maybe<B> {
        v.map(f)
    }

    fn join<A: Elem>(vv: &Maybe<Maybe<A>>) -> Maybe<A> {
        match vv {
            Maybe::Just(v) => v.clone(),
            Maybe::Bottom => Maybe::Bottom,
        }
    }
}

impl Enumerable for MaybeM {
    type Bounds = ();

    fn enumerate<A: Elem>(carrier: &[A], _: &()) -> Vec<Maybe<A>> {
        std::iter::once(Maybe::Bottom).chain(carrier.iter().cloned().map(Maybe::Just)).collect()
    }
}

/// The carrier `X + 1` as a list.
pub fn lift_carrier<A: Clone>(carrier: &[A]) -> Vec<Maybe<A>> {
    std::iter::once(Maybe::Bottom).chain(carrier.iter().cloned().map(Maybe::Just)).collect()
}
