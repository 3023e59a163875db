//! Exhaustive search for natural families on a finite fragment.
//!
//! Every node `(n, a)` with `a ∈ D(n)` gets a candidate set drawn from `C(n)`.
//! Each map `f : n → m` links `(n, a)` to `(m, Df(a))` through the function
//! `Cf`, so the search is a functional constraint network: arc consistency
//! prunes it, then we branch on the smallest undecided domain.

use super::check::TableFamily;
use super::functor::{all_maps, FinFunctor};
use std::collections::{BTreeMap, VecDeque};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn has(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn unset(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
    fn and_assign(&mut self, o: &Bits) -> bool {
        let mut changed = false;
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            let n = *a & b;
            changed |= n != *a;
            *a = n;
        }
        changed
    }
}

struct Edge {
    src: usize,
    dst: usize,
    /// index into `cmaps`
    map: usize,
}

/// Result of [`enumerate_natural`].
#[derive(Clone, Debug)]
pub struct Enumeration<DV: Ord, CV> {
    pub families: Vec<TableFamily<DV, CV>>,
    /// False when the search budget ran out.
    pub complete: bool,
    pub search_nodes: u64,
}

/// All natural families `D → C` on carriers `0..=max_carrier`, restricted to
/// candidates accepted by `admit(n, arg, value)`.
pub fn enumerate_natural<D, C, P>(
    dom: &D,
    cod: &C,
    max_carrier: usize,
    admit: P,
    budget: u64,
) -> Enumeration<D::Value, C::Value>
where
    D: FinFunctor,
    C: FinFunctor,
    P: Fn(usize, &D::Value, &C::Value) -> bool,
{
    let dvals: Vec<Vec<D::Value>> = (0..=max_carrier).map(|n| dom.values(n)).collect();
    let cvals: Vec<Vec<C::Value>> = (0..=max_carrier).map(|n| cod.values(n)).collect();
    let dindex: Vec<BTreeMap<&D::Value, usize>> =
        dvals.iter().map(|vs| vs.iter().enumerate().map(|(i, v)| (v, i)).collect()).collect();
    let cindex: Vec<BTreeMap<&C::Value, usize>> =
        cvals.iter().map(|vs| vs.iter().enumerate().map(|(i, v)| (v, i)).collect()).collect();

    let mut offset = vec![0usize; max_carrier + 2];
    for n in 0..=max_carrier {
        offset[n + 1] = offset[n] + dvals[n].len();
    }
    let total = offset[max_carrier + 1];
    let carrier_of = |node: usize| (0..=max_carrier).rfind(|&n| offset[n] <= node).unwrap_or(0);

    let mut domains: Vec<Bits> = Vec::with_capacity(total);
    for n in 0..=max_carrier {
        for a in &dvals[n] {
            let mut b = Bits::empty(cvals[n].len());
            for (i, c) in cvals[n].iter().enumerate() {
                if admit(n, a, c) {
                    b.set(i);
                }
            }
            domains.push(b);
        }
    }

    // Each edge carries `Cf` as a table; `None` marks values leaving the fragment.
    let mut cmaps: Vec<Vec<Option<usize>>> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    for n in 0..=max_carrier {
        for m in 0..=max_carrier {
            for f in all_maps(n, m) {
                let table: Vec<Option<usize>> =
                    cvals[n].iter().map(|c| cindex[m].get(&cod.map(&f, c)).copied()).collect();
                let id = cmaps.len();
                let mut used = false;
                for (ai, a) in dvals[n].iter().enumerate() {
                    let Some(&bi) = dindex[m].get(&dom.map(&f, a)) else { continue };
                    edges.push(Edge { src: offset[n] + ai, dst: offset[m] + bi, map: id });
                    used = true;
                }
                if used {
                    cmaps.push(table);
                }
            }
        }
    }
    let mut incident: Vec<Vec<usize>> = vec![vec![]; total];
    for (k, e) in edges.iter().enumerate() {
        incident[e.src].push(k);
        if e.dst != e.src {
            incident[e.dst].push(k);
        }
    }

    let net = Network { edges, cmaps, incident, sizes: (0..total).map(|k| cvals[carrier_of(k)].len()).collect() };
    let mut out = Vec::new();
    let mut search_nodes = 0u64;
    let complete = if net.propagate(&mut domains, (0..net.edges.len()).collect()) {
        net.search(domains, &mut out, &mut search_nodes, budget)
    } else {
        true
    };

    let families = out
        .into_iter()
        .map(|sol: Vec<usize>| {
            let mut entries = BTreeMap::new();
            for n in 0..=max_carrier {
                for (ai, a) in dvals[n].iter().enumerate() {
                    entries.insert((n, a.clone()), cvals[n][sol[offset[n] + ai]].clone());
                }
            }
            TableFamily { entries }
        })
        .collect();
    Enumeration { families, complete, search_nodes }
}

struct Network {
    edges: Vec<Edge>,
    cmaps: Vec<Vec<Option<usize>>>,
    incident: Vec<Vec<usize>>,
    sizes: Vec<usize>,
}

impl Network {
    /// Arc consistency. Returns false on a wipe-out.
    fn propagate(&self, doms: &mut [Bits], init: Vec<usize>) -> bool {
        let mut queued = vec![false; self.edges.len()];
        let mut queue: VecDeque<usize> = VecDeque::new();
        for k in init {
            if !queued[k] {
                queued[k] = true;
                queue.push_back(k);
            }
        }
        while let Some(k) = queue.pop_front() {
            queued[k] = false;
            let e = &self.edges[k];
            let map = &self.cmaps[e.map];
            let mut changed = vec![];
            if e.src == e.dst {
                let d = &mut doms[e.src];
                let drop: Vec<usize> = d.iter().filter(|&v| map[v] != Some(v)).collect();
                if !drop.is_empty() {
                    drop.into_iter().for_each(|v| d.unset(v));
                    changed.push(e.src);
                }
            } else {
                let drop: Vec<usize> = doms[e.src]
                    .iter()
                    .filter(|&v| !map[v].is_some_and(|w| doms[e.dst].has(w)))
                    .collect();
                if !drop.is_empty() {
                    drop.into_iter().for_each(|v| doms[e.src].unset(v));
                    changed.push(e.src);
                }
                let mut image = Bits::empty(self.sizes[e.dst]);
                for v in doms[e.src].iter() {
                    if let Some(w) = map[v] {
                        image.set(w);
                    }
                }
                if doms[e.dst].and_assign(&image) {
                    changed.push(e.dst);
                }
            }
            for x in changed {
                if doms[x].count() == 0 {
                    return false;
                }
                for &j in &self.incident[x] {
                    if !queued[j] {
                        queued[j] = true;
                        queue.push_back(j);
                    }
                }
            }
        }
        true
    }

    /// Returns false if the budget ran out.
    fn search(&self, doms: Vec<Bits>, out: &mut Vec<Vec<usize>>, visited: &mut u64, budget: u64) -> bool {
        *visited += 1;
        if *visited > budget {
            return false;
        }
        let pick = doms
            .iter()
            .enumerate()
            .filter(|(_, d)| d.count() > 1)
            .min_by_key(|(_, d)| d.count())
            .map(|(i, _)| i);
        let Some(x) = pick else {
            out.push(doms.iter().map(|d| d.iter().next().expect("non-empty")).collect());
            return true;
        };
        for v in doms[x].iter().collect::<Vec<_>>() {
            let mut next = doms.clone();
            next[x] = Bits::empty(self.sizes[x]);
            next[x].set(v);
            if self.propagate(&mut next, self.incident[x].clone()) && !self.search(next, out, visited, budget) {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::maybe::MaybeM;
    use crate::monad::powerset::{PowerSetM, SetBounds};
    use crate::nat::functor::{IdF, MonadF, Power};

    #[test]
    fn identity_endo_has_one() {
        let e = enumerate_natural(&IdF, &IdF, 3, |_, _, _| true, 1000);
        assert!(e.complete);
        assert_eq!(e.families.len(), 1);
    }

    #[test]
    fn maybe_binary_ops() {
        let m = MonadF::<MaybeM>::new(());
        let d = Power { inner: m.clone(), arity: 2 };
        let e = enumerate_natural(&d, &m, 3, |_, _, _| true, 1_000_000);
        assert!(e.complete);
        assert_eq!(e.families.len(), 12);
    }

    #[test]
    fn powerset_binary_ops() {
        let m = MonadF::<PowerSetM>::new(SetBounds::size(3));
        let d = Power { inner: m.clone(), arity: 2 };
        let e = enumerate_natural(&d, &m, 3, |_, _, _| true, 1_000_000);
        assert!(e.complete);
        assert_eq!(e.families.len(), 16);
    }
}
