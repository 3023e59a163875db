//! The seven convex-semiring axioms checked on program denotations.

use super::ast::ProbProg;
use super::sem::{convex_kernel, denote, DKernel};
use super::table::AtomTable;
use crate::error::{Error, Result};
use crate::monad::dist::{DistBounds, DistM};
use crate::monad::{kleisli_compose, Enumerable, Kernel};
use crate::nat::NatTransSpec;
use crate::rat::{rat, Rat};
use crate::report::SuiteReport;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct ConvexFragment {
    /// Maximal depth of either side of an axiom instance.
    pub depth: usize,
    /// Weights are `k / weight_denominator`.
    pub weight_denominator: i64,
    pub exhaustive_limit: u64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for ConvexFragment {
    fn default() -> Self {
        ConvexFragment { depth: 3, weight_denominator: 4, exhaustive_limit: 1_000_000, samples: 1000, seed: 42 }
    }
}

fn seq(a: &DKernel, b: &DKernel) -> DKernel {
    kleisli_compose::<DistM>(a, b).expect("kernels share the carrier")
}

fn cvx(l: Rat, a: &DKernel, b: &DKernel) -> DKernel {
    convex_kernel(&NatTransSpec::ConvexCombo(l), a, b).expect("kernels share the carrier")
}

/// `(λ', τ')` with `p +λ (q +τ r) = (p +λ' q) +τ' r`.
pub fn nesting_weights(lambda: Rat, tau: Rat) -> (Rat, Rat) {
    let s = lambda + (Rat::one() - lambda) * tau;
    if s.is_zero() {
        (Rat::zero(), s)
    } else {
        (lambda / s, s)
    }
}

/// Programs of depth ≤ `depth` over the table's atoms, `skip`, `;` and
/// `+_λ`, one representative per denotation.
pub fn program_pool(t: &AtomTable, lambdas: &[Rat], depth: usize) -> Result<Vec<(ProbProg, DKernel)>> {
    let mut pool: Vec<(ProbProg, DKernel)> = vec![];
    let push = |pool: &mut Vec<(ProbProg, DKernel)>, p: ProbProg, k: DKernel| {
        if !pool.iter().any(|(_, k2)| *k2 == k) {
            pool.push((p, k));
        }
    };
    for p in std::iter::once(ProbProg::Skip).chain(t.atoms.keys().map(|a| ProbProg::atom(a))) {
        if let Ok(k) = denote(&p, t) {
            push(&mut pool, p, k);
        }
    }
    for _ in 1..depth {
        let prev = pool.clone();
        for (p, kp) in &prev {
            for (q, kq) in &prev {
                push(&mut pool, ProbProg::seq(p.clone(), q.clone()), seq(kp, kq));
                for l in lambdas {
                    push(&mut pool, ProbProg::convex(*l, p.clone(), q.clone()), cvx(*l, kp, kq));
                }
            }
        }
        if pool.len() > 20_000 {
            return Err(Error::Guard(format!("program pool of {} denotations", pool.len())));
        }
    }
    Ok(pool)
}

type Instance<'a> = (&'a [(ProbProg, DKernel)], &'a [Rat]);

struct Axiom {
    key: &'static str,
    name: &'static str,
    /// Operator nesting above the variables.
    nesting: usize,
    vars: usize,
    weights: usize,
    sides: Sides,
}

/// Both sides of an instance and its description, from the variables, the
/// weights and the skip kernel.
type Sides = fn(&[&(ProbProg, DKernel)], &[Rat], &DKernel) -> (DKernel, DKernel, String);

fn axioms() -> Vec<Axiom> {
    vec![
        Axiom {
            key: "unit",
            name: "p;skip = skip;p = p",
            nesting: 1,
            vars: 1,
            weights: 0,
            sides: |v, _, skip| {
                let p = &v[0].1;
                let (l, r) = (seq(p, skip), seq(skip, p));
                let ok = l == *p && r == *p;
                (if ok { p.clone() } else { l }, if ok { p.clone() } else { r }, format!("p = {}", v[0].0))
            },
        },
        Axiom {
            key: "left-distributivity",
            name: "p;(q +λ r) = (p;q) +λ (p;r)",
            nesting: 2,
            vars: 3,
            weights: 1,
            sides: |v, w, _| {
                let (p, q, r) = (&v[0].1, &v[1].1, &v[2].1);
                (seq(p, &cvx(w[0], q, r)), cvx(w[0], &seq(p, q), &seq(p, r)), format!("p = {}, q = {}, r = {}, λ = {}", v[0].0, v[1].0, v[2].0, w[0]))
            },
        },
        Axiom {
            key: "right-distributivity",
            name: "(p +λ q);r = (p;r) +λ (q;r)",
            nesting: 2,
            vars: 3,
            weights: 1,
            sides: |v, w, _| {
                let (p, q, r) = (&v[0].1, &v[1].1, &v[2].1);
                (seq(&cvx(w[0], p, q), r), cvx(w[0], &seq(p, r), &seq(q, r)), format!("p = {}, q = {}, r = {}, λ = {}", v[0].0, v[1].0, v[2].0, w[0]))
            },
        },
        Axiom {
            key: "nesting",
            name: "p +λ (q +τ r) = (p +λ/(λ+(1−λ)τ) q) +(λ+(1−λ)τ) r",
            nesting: 2,
            vars: 3,
            weights: 2,
            sides: |v, w, _| {
                let (p, q, r) = (&v[0].1, &v[1].1, &v[2].1);
                let (a, s) = nesting_weights(w[0], w[1]);
                (
                    cvx(w[0], p, &cvx(w[1], q, r)),
                    cvx(s, &cvx(a, p, q), r),
                    format!("p = {}, q = {}, r = {}, λ = {}, τ = {}", v[0].0, v[1].0, v[2].0, w[0], w[1]),
                )
            },
        },
        Axiom {
            key: "associativity",
            name: "p;(q;r) = (p;q);r",
            nesting: 2,
            vars: 3,
            weights: 0,
            sides: |v, _, _| {
                let (p, q, r) = (&v[0].1, &v[1].1, &v[2].1);
                (seq(p, &seq(q, r)), seq(&seq(p, q), r), format!("p = {}, q = {}, r = {}", v[0].0, v[1].0, v[2].0))
            },
        },
        Axiom {
            key: "skew-commutativity",
            name: "p +λ q = q +(1−λ) p",
            nesting: 1,
            vars: 2,
            weights: 1,
            sides: |v, w, _| {
                let (p, q) = (&v[0].1, &v[1].1);
                (cvx(w[0], p, q), cvx(Rat::one() - w[0], q, p), format!("p = {}, q = {}, λ = {}", v[0].0, v[1].0, w[0]))
            },
        },
        Axiom {
            key: "idempotence",
            name: "p +λ p = p",
            nesting: 1,
            vars: 1,
            weights: 1,
            sides: |v, w, _| {
                let p = &v[0].1;
                (cvx(w[0], p, p), p.clone(), format!("p = {}, λ = {}", v[0].0, w[0]))
            },
        },
    ]
}

fn first_difference(l: &DKernel, r: &DKernel, t: &AtomTable) -> String {
    match (0..l.domain()).find(|x| l.rows[*x] != r.rows[*x]) {
        Some(x) => format!("at {}: {:?} vs {:?}", t.carrier[x], l.rows[x], r.rows[x]),
        None => "kernels differ".into(),
    }
}

/// Checks axioms (1)–(7) on denotations of programs over `t`. Each axiom's
/// variables range over the programs that keep both sides within
/// `frag.depth`; weights range over `k / weight_denominator`.
pub fn convex_semiring_suite(t: &AtomTable, frag: &ConvexFragment) -> Result<SuiteReport> {
    if frag.depth < 2 || frag.weight_denominator < 1 {
        return Err(Error::Fragment("the convex suite needs depth ≥ 2 and a positive denominator".into()));
    }
    let lambdas: Vec<Rat> = (0..=frag.weight_denominator).map(|k| rat(k, frag.weight_denominator)).collect();
    let skip = Kernel::new(t.len(), (0..t.len()).map(crate::monad::dist::Dist::point).collect());
    let mut rep = SuiteReport::new("convex");
    let mut pools: Vec<Vec<(ProbProg, DKernel)>> = vec![vec![]];
    for d in 1..frag.depth {
        pools.push(program_pool(t, &lambdas, d)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(frag.seed);
    for ax in axioms() {
        let pool: Instance = (&pools[frag.depth - ax.nesting], &lambdas);
        let dims: Vec<usize> =
            std::iter::repeat_n(pool.0.len(), ax.vars).chain(std::iter::repeat_n(pool.1.len(), ax.weights)).collect();
        let total: u128 = dims.iter().map(|d| *d as u128).product();
        let exhaustive = total <= frag.exhaustive_limit as u128;
        let count = if exhaustive { total as u64 } else { frag.samples as u64 };
        let mut failures = 0u64;
        let mut idx = vec![0usize; dims.len()];
        for i in 0..count {
            if exhaustive {
                let mut r = i as usize;
                for (k, d) in dims.iter().enumerate() {
                    idx[k] = r % d;
                    r /= d;
                }
            } else {
                for (k, d) in dims.iter().enumerate() {
                    idx[k] = rng.gen_range(0..*d);
                }
            }
            let vars: Vec<&(ProbProg, DKernel)> = idx[..ax.vars].iter().map(|i| &pool.0[*i]).collect();
            let ws: Vec<Rat> = idx[ax.vars..].iter().map(|i| pool.1[*i]).collect();
            let (l, r, desc) = (ax.sides)(&vars, &ws, &skip);
            if l != r {
                failures += 1;
                if failures <= 3 {
                    rep.check(false, || format!("{}: {desc}; {}", ax.name, first_difference(&l, &r, t)));
                }
            }
        }
        let key = ax.key;
        rep.count(&format!("{key}.instances"), count);
        rep.count(&format!("{key}.exhaustive"), exhaustive);
        rep.count(&format!("{key}.failures"), failures);
    }
    let (a, s) = nesting_weights(rat(1, 2), rat(1, 2));
    rep.count("nesting.weights(1/2,1/2)", format!("{a}, {s}"));
    rep.check(a == rat(2, 3) && s == rat(3, 4), || format!("λ = τ = 1/2 gave weights {a}, {s}"));
    rep.count("pool.programs", pools.last().map_or(0, Vec::len));
    Ok(rep)
}

/// `n` states named `0..n` and `atoms` atoms with rows drawn from the
/// distributions whose weights are multiples of `1/denominator`.
pub fn random_table(n: usize, atoms: usize, denominator: u64, seed: u64) -> Result<AtomTable> {
    let mut t = AtomTable::new((0..n).map(|i| i.to_string()).collect())?;
    let rows = DistM::enumerate(&(0..n).collect::<Vec<_>>(), &DistBounds::dividing(denominator));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for a in 0..atoms {
        let k = Kernel::new(n, (0..n).map(|_| rows[rng.gen_range(0..rows.len())].clone()).collect());
        t.add_total_atom(&format!("a{a}"), &k)?;
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_holds() {
        let t = random_table(2, 2, 2, 1).unwrap();
        let rep = convex_semiring_suite(&t, &ConvexFragment { weight_denominator: 2, ..Default::default() }).unwrap();
        assert!(rep.passed(), "{rep}");
    }

    #[test]
    fn weights() {
        assert_eq!(nesting_weights(rat(1, 2), rat(1, 2)), (rat(2, 3), rat(3, 4)));
        assert_eq!(nesting_weights(Rat::zero(), Rat::zero()).1, Rat::zero());
    }
}
