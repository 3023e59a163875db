//! The guarded-choice equations over `Dist∘Maybe`, with Kozen's case split as
//! an independent oracle.
//!
//! Every equation is pointwise in the state: the value at `x` only depends on
//! the kernels' rows at `x` and the tests at `x`. On small carriers, constant
//! kernels over the whole fragment together with all tests therefore cover
//! every combination that can occur at a single state.

use super::lift::{if_then_else, SelectionPolicy, Test};
use crate::error::Result;
use crate::monad::composite::MaybeT;
use crate::monad::dist::{DistBounds, DistM};
use crate::monad::maybe::Maybe;
use crate::monad::{Enumerable, Kernel, Monad};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};

type V = <MaybeT<DistM> as Monad>::Val<usize>;
type K = Kernel<V>;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct IteReport {
    /// Instances per check, keyed by name.
    pub counts: BTreeMap<String, u64>,
    pub failures: Vec<String>,
}

impl IteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn tick(&mut self, key: &str, ok: bool, witness: impl FnOnce() -> String) {
        *self.counts.entry(key.to_string()).or_default() += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(format!("{key}: {}", witness()));
        }
    }
}

fn ite(b: &Test, p: &K, q: &K) -> Result<K> {
    if_then_else::<DistM>(b, p, q, SelectionPolicy::default())
}

fn kozen(b: &Test, p: &K, q: &K) -> K {
    Kernel::new(p.codomain, (0..b.carrier()).map(|x| if b.holds(x) { p.rows[x].clone() } else { q.rows[x].clone() }).collect())
}

fn check_pair(rep: &mut IteReport, b: &Test, p: &K, q: &K) -> Result<()> {
    let l = ite(b, p, q)?;
    let r = ite(&b.not(), q, p)?;
    rep.tick("p+_b q = q+_¬b p", l == r, || format!("{b:?} p={:?} q={:?}: {:?} vs {:?}", p.rows, q.rows, l.rows, r.rows));
    let k = kozen(b, p, q);
    rep.tick("kozen", l == k, || format!("{b:?} p={:?} q={:?}: {:?} vs {:?}", p.rows, q.rows, l.rows, k.rows));
    for pol in [SelectionPolicy::RightBiased, SelectionPolicy::BottomOnClash] {
        let o = if_then_else::<DistM>(b, p, q, pol)?;
        rep.tick("policies agree", o == l, || format!("{pol:?} {b:?}: {:?} vs {:?}", o.rows, l.rows));
    }
    Ok(())
}

fn check_single(rep: &mut IteReport, b: &Test, p: &K) -> Result<()> {
    let l = ite(b, p, p)?;
    rep.tick("p+_b p = p", l == *p, || format!("{b:?} p={:?}: {:?}", p.rows, l.rows));
    Ok(())
}

fn check_true(rep: &mut IteReport, p: &K, q: &K) -> Result<()> {
    let l = ite(&Test::always(p.domain()), p, q)?;
    rep.tick("p+_1 q = p", l == *p, || format!("p={:?} q={:?}: {:?}", p.rows, q.rows, l.rows));
    Ok(())
}

/// `(p +_a q) +_b r = p +_{a;b} (q +_{¬a;b} r)`.
fn check_nesting(rep: &mut IteReport, a: &Test, b: &Test, p: &K, q: &K, r: &K) -> Result<()> {
    let l = ite(b, &ite(a, p, q)?, r)?;
    let rr = ite(&a.and(b), p, &ite(&a.not().and(b), q, r)?)?;
    rep.tick("nesting", l == rr, || {
        format!("a={a:?} b={b:?} p={:?} q={:?} r={:?}: {:?} vs {:?}", p.rows, q.rows, r.rows, l.rows, rr.rows)
    });
    Ok(())
}

/// Constant kernels over `Dist∘Maybe` values with denominators dividing 2,
/// plus (for `n ≤ 2`) all kernels with point-mass rows.
pub fn kernel_pool(n: usize) -> Vec<K> {
    let xs: Vec<usize> = (0..n).collect();
    let vals = MaybeT::<DistM>::enumerate(&xs, &DistBounds::dividing(2));
    let mut pool: BTreeSet<K> = vals.iter().map(|v| Kernel::new(n, vec![v.clone(); n])).collect();
    if n <= 2 {
        let points: Vec<V> =
            std::iter::once(Maybe::Bottom).chain(xs.iter().map(|x| Maybe::Just(*x))).map(DistM::unit).collect();
        pool.extend(crate::monad::all_kernels(n, &points));
    }
    pool.into_iter().collect()
}

fn random_kernel(rng: &mut ChaCha8Rng, n: usize, vals: &[V]) -> K {
    Kernel::new(n, (0..n).map(|_| vals[rng.gen_range(0..vals.len())].clone()).collect())
}

/// Exhaustive pools on carriers `1..=max_exhaustive`, then `samples` random
/// instances on a carrier of size `random_carrier`.
pub fn ite_axiom_suite(max_exhaustive: usize, random_carrier: usize, samples: usize, seed: u64) -> Result<IteReport> {
    let mut rep = IteReport::default();
    for n in 1..=max_exhaustive {
        let pool = kernel_pool(n);
        let tests = Test::all(n);
        for b in &tests {
            for p in &pool {
                check_single(&mut rep, b, p)?;
                for q in &pool {
                    check_pair(&mut rep, b, p, q)?;
                }
            }
        }
        for p in &pool {
            for q in &pool {
                check_true(&mut rep, p, q)?;
            }
        }
        for a in &tests {
            for b in &tests {
                for p in &pool {
                    for q in &pool {
                        for r in &pool {
                            check_nesting(&mut rep, a, b, p, q, r)?;
                        }
                    }
                }
            }
        }
    }
    let exhaustive: u64 = rep.counts.values().sum();
    rep.counts.insert("exhaustive checks".into(), exhaustive);

    let n = random_carrier;
    let xs: Vec<usize> = (0..n).collect();
    let vals = MaybeT::<DistM>::enumerate(&xs, &DistBounds::dividing(4));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tests = Test::all(n);
    for _ in 0..samples {
        let [p, q, r] = [0, 1, 2].map(|_| random_kernel(&mut rng, n, &vals));
        let a = tests[rng.gen_range(0..tests.len())].clone();
        let b = tests[rng.gen_range(0..tests.len())].clone();
        check_single(&mut rep, &b, &p)?;
        check_pair(&mut rep, &b, &p, &q)?;
        check_true(&mut rep, &p, &q)?;
        check_nesting(&mut rep, &a, &b, &p, &q, &r)?;
        *rep.counts.entry("random instances".into()).or_default() += 1;
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite() {
        let r = ite_axiom_suite(2, 3, 50, 42).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
    }

    #[test]
    fn hand_nesting_instance() {
        use crate::monad::dist::{coin, Dist};
        use crate::rat::rat;
        let n = 4;
        let a = Test::from_fn(n, |x| x % 2 == 0);
        let b = Test::from_fn(n, |x| x < 2);
        let p = Kernel::new(n, (0..n).map(|x| Dist::point(Maybe::Just(x))).collect());
        let q = Kernel::new(n, (0..n).map(|x| coin(rat(1, 4), Maybe::Just((x + 1) % n), Maybe::Bottom).unwrap()).collect());
        let r = Kernel::new(n, vec![Dist::point(Maybe::Just(3)); n]);
        let mut rep = IteReport::default();
        check_nesting(&mut rep, &a, &b, &p, &q, &r).unwrap();
        assert!(rep.passed());
        let l = ite(&b, &ite(&a, &p, &q).unwrap(), &r).unwrap();
        assert_eq!(l.rows[0], Dist::point(Maybe::Just(0)));
        assert_eq!(l.rows[1], coin(rat(1, 4), Maybe::Just(2), Maybe::Bottom).unwrap());
        assert_eq!(l.rows[2], Dist::point(Maybe::Just(3)));
    }
}
