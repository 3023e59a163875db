//! Connected components of the category of elements, restricted to a fragment.

use super::functor::{all_maps, FinFunctor, FinMap};
use std::collections::BTreeMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit<V> {
    /// Image of a member under the map to the one-point carrier.
    pub label: Option<V>,
    pub members: Vec<(usize, V)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDecomposition<V> {
    pub orbits: Vec<Orbit<V>>,
}

impl<V> OrbitDecomposition<V> {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn objects(&self) -> usize {
        self.orbits.iter().map(|o| o.members.len()).sum()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Orbits of `El(F)` on carriers `0..=max_carrier`, zigzags through all maps
/// whose image stays inside the fragment.
pub fn orbits<F: FinFunctor>(functor: &F, max_carrier: usize) -> OrbitDecomposition<F::Value> {
    let mut objects: Vec<(usize, F::Value)> = Vec::new();
    for n in 0..=max_carrier {
        objects.extend(functor.values(n).into_iter().map(|v| (n, v)));
    }
    let index: BTreeMap<&(usize, F::Value), usize> = objects.iter().enumerate().map(|(i, o)| (o, i)).collect();
    let mut parent: Vec<usize> = (0..objects.len()).collect();
    for n in 0..=max_carrier {
        for m in 0..=max_carrier {
            for f in all_maps(n, m) {
                for v in functor.values(n) {
                    let (Some(&a), Some(&b)) = (index.get(&(n, v.clone())), index.get(&(m, functor.map(&f, &v)))) else {
                        continue;
                    };
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra.max(rb)] = ra.min(rb);
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<(usize, F::Value)>> = BTreeMap::new();
    for (i, o) in objects.iter().enumerate() {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(o.clone());
    }
    let orbits = groups
        .into_values()
        .map(|members| {
            let (n, v) = &members[0];
            let bang = FinMap { table: vec![0; *n], codomain: 1 };
            let label = Some(functor.map(&bang, v)).filter(|l| index.contains_key(&(1, l.clone())));
            Orbit { label, members }
        })
        .collect();
    OrbitDecomposition { orbits }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::dist::{DistBounds, DistM};
    use crate::nat::functor::MonadF;

    #[test]
    fn dist_single_orbit() {
        let d = MonadF::<DistM>::new(DistBounds::at_most(4));
        let o = orbits(&d, 3);
        assert_eq!(o.len(), 1);
    }
}
