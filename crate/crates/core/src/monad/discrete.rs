//! Discrete-time stand-in for the hybrid monad: a trajectory of duration `d`
//! is a total map `{0,…,d} → X`.

use super::{Elem, Enumerable, Monad};
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiscreteTraj<A> {
    values: Vec<A>,
}

impl<A: Clone> DiscreteTraj<A> {
    pub fn new(values: Vec<A>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidValue("a discrete trajectory needs at least one value".into()));
        }
        Ok(DiscreteTraj { values })
    }

    pub fn constant(a: A, d: usize) -> Self {
        DiscreteTraj { values: vec![a; d + 1] }
    }

    pub fn duration(&self) -> usize {
        self.values.len() - 1
    }

    pub fn at(&self, t: usize) -> &A {
        &self.values[t]
    }

    pub fn values(&self) -> &[A] {
        &self.values
    }

    /// θ: the value at time 0.
    pub fn start(&self) -> &A {
        &self.values[0]
    }

    pub fn end(&self) -> &A {
        &self.values[self.values.len() - 1]
    }

    /// Concatenation; the junction takes the value of `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut v = self.values[..self.values.len() - 1].to_vec();
        v.extend(other.values.iter().cloned());
        DiscreteTraj { values: v }
    }
}

impl<A: fmt::Debug> fmt::Debug for DiscreteTraj<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v:?}")?;
        }
        write!(f, "⟩")
    }
}

pub struct DiscreteHybridM;

#[derive(Clone, Copy, Debug)]
pub struct DurationBounds {
    pub max_duration: usize,
}

impl DurationBounds {
    pub fn upto(d: usize) -> Self {
        DurationBounds { max_duration: d }
    }
}

impl Monad for DiscreteHybridM {
    type Val<A: Elem> = DiscreteTraj<A>;

    fn name() -> String {
        "DiscreteHybrid".into()
    }

    fn unit<A: Elem>(a: A) -> DiscreteTraj<A> {
        DiscreteTraj { values: vec![a] }
    }

    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &DiscreteTraj<A>, f: F) -> DiscreteTraj<B> {
        DiscreteTraj { values: v.values.iter().map(f).collect() }
    }

    /// `μ(f, d) = (θ ∘ f, d) ++ f(d)`.
    fn join<A: Elem>(vv: &DiscreteTraj<DiscreteTraj<A>>) -> DiscreteTraj<A> {
        let head = DiscreteTraj { values: vv.values.iter().map(|t| t.start().clone()).collect() };
        head.concat(vv.end())
    }
}

impl Enumerable for DiscreteHybridM {
    type Bounds = DurationBounds;

    fn enumerate<A: Elem>(carrier: &[A], b: &DurationBounds) -> Vec<DiscreteTraj<A>> {
        let mut out = Vec::new();
        if carrier.is_empty() {
            return out;
        }
        let mut layer: Vec<Vec<A>> = carrier.iter().map(|a| vec![a.clone()]).collect();
        for _ in 0..=b.max_duration {
            out.extend(layer.iter().cloned().map(|values| DiscreteTraj { values }));
            layer = layer
                .into_iter()
                .flat_map(|p| {
                    carrier.iter().map(move |a| {
                        let mut q = p.clone();
                        q.push(a.clone());
                        q
                    })
                })
                .collect();
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_unfolds() {
        let f0 = DiscreteTraj::new(vec!['a']).unwrap();
        let f1 = DiscreteTraj::new(vec!['b', 'c']).unwrap();
        let outer = DiscreteTraj::new(vec![f0, f1]).unwrap();
        assert_eq!(DiscreteHybridM::join(&outer).values(), &['a', 'b', 'c']);
    }

    #[test]
    fn enumeration_count() {
        assert_eq!(DiscreteHybridM::enumerate(&[0, 1], &DurationBounds::upto(2)).len(), 14);
        assert!(DiscreteHybridM::enumerate::<u8>(&[], &DurationBounds::upto(2)).is_empty());
    }
}
