//! Monads on finite-support values, their enumeration on bounded fragments,
//! Kleisli composition of finite kernels and the exhaustive law checker.

pub mod composite;
pub mod discrete;
pub mod dist;
pub mod maybe;
pub mod multiset;
pub mod powerset;

use crate::error::{Error, Result};
use std::fmt::Debug;

/// Bound shared by every value a monad may hold.
pub trait Elem: Clone + Ord + Debug {}
impl<T: Clone + Ord + Debug> Elem for T {}

/// The empty carrier. `T(Never)` is the set of constants of `T`.
pub type Never = std::convert::Infallible;

pub fn absurd<A>(n: &Never) -> A {
    match *n {}
}

/// A monad on `Set`, restricted to values with decidable equality.
pub trait Monad {
    type Val<A: Elem>: Elem;

    fn name() -> String;
    fn unit<A: Elem>(a: A) -> Self::Val<A>;
    fn fmap<A: Elem, B: Elem, F: Fn(&A) -> B>(v: &Self::Val<A>, f: F) -> Self::Val<B>;
    fn join<A: Elem>(vv: &Self::Val<Self::Val<A>>) -> Self::Val<A>;

    fn bind<A: Elem, B: Elem, F: Fn(&A) -> Self::Val<B>>(v: &Self::Val<A>, f: F) -> Self::Val<B> {
        Self::join(&Self::fmap(v, f))
    }
}

/// A monad whose values over a finite carrier can be listed under some bound.
pub trait Enumerable: Monad {
    type Bounds: Clone + Debug;

    fn enumerate<A: Elem>(carrier: &[A], bounds: &Self::Bounds) -> Vec<Self::Val<A>>;
}

/// Constants of `T`, i.e. `T∅`, listed under the given bounds.
pub fn constants<M: Enumerable>(bounds: &M::Bounds) -> Vec<M::Val<Never>> {
    M::enumerate::<Never>(&[], bounds)
}

/// The constant family `1 → T` induced by an element of `T∅`.
pub fn induce<M: Monad, A: Elem>(c: &M::Val<Never>) -> M::Val<A> {
    M::fmap(c, absurd)
}

/// A total kernel `n → T m` over finite carriers `{0..n}` and `{0..m}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Kernel<V> {
    pub codomain: usize,
    pub rows: Vec<V>,
}

impl<V: Clone> Kernel<V> {
    pub fn new(codomain: usize, rows: Vec<V>) -> Self {
        Kernel { codomain, rows }
    }

    pub fn domain(&self) -> usize {
        self.rows.len()
    }

    pub fn at(&self, x: usize) -> &V {
        &self.rows[x]
    }
}

pub fn unit_kernel<M: Monad>(n: usize) -> Kernel<M::Val<usize>> {
    Kernel::new(n, (0..n).map(M::unit).collect())
}

/// `μ ∘ T g ∘ f`.
pub fn kleisli_compose<M: Monad>(
    f: &Kernel<M::Val<usize>>,
    g: &Kernel<M::Val<usize>>,
) -> Result<Kernel<M::Val<usize>>> {
    if f.codomain != g.domain() {
        return Err(Error::CarrierMismatch(format!(
            "first kernel lands in {} points, second is defined on {}",
            f.codomain,
            g.domain()
        )));
    }
    let rows = f.rows.iter().map(|v| M::bind(v, |y| g.rows[*y].clone())).collect();
    Ok(Kernel::new(g.codomain, rows))
}

/// All kernels `n → T n` whose rows are drawn from `values`.
pub fn all_kernels<V: Clone>(n: usize, values: &[V]) -> Vec<Kernel<V>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(out.len() * values.len());
        for row in &out {
            for v in values {
                let mut r: Vec<V> = row.clone();
                r.push(v.clone());
                next.push(r);
            }
        }
        out = next;
    }
    out.into_iter().map(|rows| Kernel::new(n, rows)).collect()
}

/// Fragment description for [`check_monad_laws`].
///
/// Unit laws are checked on `T X` enumerated with `unit_bounds`. Associativity
/// is checked on `T(T(T X))` where the three levels are enumerated with
/// `assoc_bounds[0]`, `[1]`, `[2]` from the inside out.
#[derive(Clone, Debug)]
pub struct LawFragment<B> {
    pub max_carrier: usize,
    pub unit_bounds: B,
    pub assoc_bounds: [B; 3],
    pub guard: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawWitness {
    pub law: &'static str,
    pub carrier: usize,
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LawReport {
    pub monad: String,
    pub unit_values: usize,
    pub assoc_values: usize,
    pub witness: Option<LawWitness>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn guarded<T>(v: Vec<T>, guard: usize, what: &str) -> Result<Vec<T>> {
    if v.len() > guard {
        Err(Error::Guard(format!("{what}: {} values exceed {guard}", v.len())))
    } else {
        Ok(v)
    }
}

/// Exhaustively checks `μ∘η_T = μ∘Tη = id` and `μ∘μ_T = μ∘Tμ` on a fragment.
pub fn check_monad_laws<M: Enumerable>(frag: &LawFragment<M::Bounds>) -> Result<LawReport> {
    let mut rep = LawReport { monad: M::name(), unit_values: 0, assoc_values: 0, witness: None };
    for n in 0..=frag.max_carrier {
        let xs: Vec<usize> = (0..n).collect();
        let tx = guarded(M::enumerate(&xs, &frag.unit_bounds), frag.guard, "T X")?;
        for v in &tx {
            rep.unit_values += 1;
            let left = M::join(&M::unit(v.clone()));
            if &left != v {
                rep.witness = Some(witness("left unit", n, v, &left, v));
                return Ok(rep);
            }
            let right = M::join(&M::fmap(v, |x| M::unit(*x)));
            if &right != v {
                rep.witness = Some(witness("right unit", n, v, &right, v));
                return Ok(rep);
            }
        }
        let l0 = guarded(M::enumerate(&xs, &frag.assoc_bounds[0]), frag.guard, "T X")?;
        let l1 = guarded(M::enumerate(&l0, &frag.assoc_bounds[1]), frag.guard, "T² X")?;
        let l2 = guarded(M::enumerate(&l1, &frag.assoc_bounds[2]), frag.guard, "T³ X")?;
        for w in &l2 {
            rep.assoc_values += 1;
            let a = M::join(&M::join(w));
            let b = M::join(&M::fmap(w, |inner| M::join(inner)));
            if a != b {
                rep.witness = Some(witness("associativity", n, w, &a, &b));
                return Ok(rep);
            }
        }
    }
    Ok(rep)
}

fn witness<I: Debug, V: Debug>(law: &'static str, n: usize, input: &I, l: &V, r: &V) -> LawWitness {
    LawWitness {
        law,
        carrier: n,
        input: format!("{input:?}"),
        lhs: format!("{l:?}"),
        rhs: format!("{r:?}"),
    }
}

/// Weak compositions of `total` into `parts` nonnegative integers.
pub(crate) fn compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    let mut cur = vec![0u64; parts];
    fn go(i: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            go(i + 1, left - k, cur, out);
        }
    }
    go(0, total, &mut cur, &mut out);
    out
}

/// Index subsets of `{0..n}` of size at most `max`, in lexicographic order.
pub(crate) fn subsets_upto(n: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    fn go(start: usize, n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == max {
            return;
        }
        for i in start..n {
            cur.push(i);
            out.push(cur.clone());
            go(i + 1, n, max, cur, out);
            cur.pop();
        }
    }
    go(0, n, max, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(4, 3).len(), 15);
        assert_eq!(compositions(0, 0).len(), 1);
        assert_eq!(compositions(2, 0).len(), 0);
    }

    #[test]
    fn subsets_count() {
        assert_eq!(subsets_upto(4, 4).len(), 16);
        assert_eq!(subsets_upto(4, 2).len(), 11);
    }
}
