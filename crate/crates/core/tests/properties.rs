use kleisli_core::combine::{if_then_else, interpret_test, SelectionPolicy, Test};
use kleisli_core::expm::AffineFlow;
use kleisli_core::hyb::sem::{CProg, CTrigger};
use kleisli_core::hyb::{compile, emit_csv, hit_time, parse_hyb, run_hyb, HitResult, HybProg, Mode, NumericConfig};
use kleisli_core::monad::composite::MaybeT;
use kleisli_core::monad::dist::DistM;
use kleisli_core::monad::powerset::PowerSetM;
use kleisli_core::monad::{kleisli_compose, unit_kernel, Kernel};
use kleisli_core::nat::apply_nt;
use kleisli_core::prob::sem::convex_kernel;
use kleisli_core::prob::{denote, random_table, ProbProg};
use kleisli_core::rat::rat;
use kleisli_core::{Dist, Maybe, NatTransSpec, Rat};
use nalgebra::{DMatrix, DVector};
use num_traits::One;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn dist_row<A: Ord + Clone + std::fmt::Debug>(outcomes: Vec<A>, weights: Vec<u32>) -> Dist<A> {
    let mut w = weights;
    if w.iter().all(|x| *x == 0) {
        w[0] = 1;
    }
    let total: u32 = w.iter().sum();
    let pairs: Vec<(A, Rat)> = outcomes.into_iter().zip(w).filter(|(_, x)| *x > 0).map(|(a, x)| (a, rat(x as i64, total as i64))).collect();
    Dist::from_pairs(pairs).unwrap()
}

fn dist_kernel(n: usize) -> impl Strategy<Value = Kernel<Dist<usize>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, n), n)
        .prop_map(move |rows| Kernel::new(n, rows.into_iter().map(|w| dist_row((0..n).collect(), w)).collect()))
}

fn subdist_kernel(n: usize) -> impl Strategy<Value = Kernel<Dist<Maybe<usize>>>> {
    prop::collection::vec(prop::collection::vec(0u32..4, n + 1), n).prop_map(move |rows| {
        let outcomes: Vec<Maybe<usize>> = std::iter::once(Maybe::Bottom).chain((0..n).map(Maybe::Just)).collect();
        Kernel::new(n, rows.into_iter().map(|w| dist_row(outcomes.clone(), w)).collect())
    })
}

fn set_kernel(n: usize) -> impl Strategy<Value = Kernel<BTreeSet<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0..n, 0..=n), n).prop_map(move |rows| Kernel::new(n, rows))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dist_kleisli_laws((f, g, h) in (1usize..5).prop_flat_map(|n| (dist_kernel(n), dist_kernel(n), dist_kernel(n)))) {
        let n = f.codomain;
        let e = unit_kernel::<DistM>(n);
        prop_assert_eq!(kleisli_compose::<DistM>(&e, &f).unwrap(), f.clone());
        prop_assert_eq!(kleisli_compose::<DistM>(&f, &e).unwrap(), f.clone());
        let l = kleisli_compose::<DistM>(&kleisli_compose::<DistM>(&f, &g).unwrap(), &h).unwrap();
        let r = kleisli_compose::<DistM>(&f, &kleisli_compose::<DistM>(&g, &h).unwrap()).unwrap();
        prop_assert!(l.rows.iter().all(|d| d.total() == Rat::one()));
        prop_assert_eq!(l, r);
    }

    #[test]
    fn dist_maybe_kleisli_laws((f, g, h) in (1usize..4).prop_flat_map(|n| (subdist_kernel(n), subdist_kernel(n), subdist_kernel(n)))) {
        let n = f.codomain;
        let e = unit_kernel::<MaybeT<DistM>>(n);
        prop_assert_eq!(kleisli_compose::<MaybeT<DistM>>(&e, &f).unwrap(), f.clone());
        prop_assert_eq!(kleisli_compose::<MaybeT<DistM>>(&f, &e).unwrap(), f.clone());
        let l = kleisli_compose::<MaybeT<DistM>>(&kleisli_compose::<MaybeT<DistM>>(&f, &g).unwrap(), &h).unwrap();
        let r = kleisli_compose::<MaybeT<DistM>>(&f, &kleisli_compose::<MaybeT<DistM>>(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn powerset_kleisli_laws((f, g, h) in (1usize..5).prop_flat_map(|n| (set_kernel(n), set_kernel(n), set_kernel(n)))) {
        let n = f.codomain;
        let e = unit_kernel::<PowerSetM>(n);
        prop_assert_eq!(kleisli_compose::<PowerSetM>(&e, &f).unwrap(), f.clone());
        prop_assert_eq!(kleisli_compose::<PowerSetM>(&f, &e).unwrap(), f.clone());
        let l = kleisli_compose::<PowerSetM>(&kleisli_compose::<PowerSetM>(&f, &g).unwrap(), &h).unwrap();
        let r = kleisli_compose::<PowerSetM>(&f, &kleisli_compose::<PowerSetM>(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn shrink_output_within_union(
        table in prop::sample::select(NatTransSpec::all_shrinks(2)),
        u in prop::collection::btree_set(0usize..6, 0..4),
        v in prop::collection::btree_set(0usize..6, 0..4),
    ) {
        let spec = NatTransSpec::powerset_shrink(2, table).unwrap();
        let out: BTreeSet<usize> = apply_nt(&spec, &[u.clone(), v.clone()]).unwrap();
        prop_assert!(out.is_subset(&u.union(&v).cloned().collect()));
    }

    #[test]
    fn convex_combination_is_natural(
        k in 0i64..=4,
        u in prop::collection::vec(0u32..4, 4),
        v in prop::collection::vec(0u32..4, 4),
        f in prop::collection::vec(0usize..2, 4),
    ) {
        let spec = NatTransSpec::ConvexCombo(rat(k, 4));
        let (du, dv) = (dist_row((0..4).collect(), u), dist_row((0..4).collect(), v));
        let lhs = apply_nt(&spec, &[du.map(|x| f[*x]), dv.map(|x| f[*x])]).unwrap();
        let rhs = apply_nt(&spec, &[du, dv]).unwrap().map(|x| f[*x]);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ite_is_guarded_choice(
        (p, q, truth) in (1usize..4).prop_flat_map(|n| (subdist_kernel(n), subdist_kernel(n), prop::collection::vec(any::<bool>(), n))),
    ) {
        let b = Test::new(truth.clone());
        for policy in SelectionPolicy::ALL {
            let k = if_then_else::<DistM>(&b, &p, &q, policy).unwrap();
            for (x, row) in k.rows.iter().enumerate() {
                prop_assert_eq!(row, if truth[x] { &p.rows[x] } else { &q.rows[x] });
            }
        }
        let t = interpret_test::<DistM>(&b);
        prop_assert_eq!(kleisli_compose::<MaybeT<DistM>>(&t, &t).unwrap(), t);
    }
}

fn prob_prog() -> impl Strategy<Value = ProbProg> {
    let leaf = prop_oneof![Just(ProbProg::Skip), (0usize..3).prop_map(|i| ProbProg::atom(&format!("a{i}")))];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(p, q)| ProbProg::seq(p, q)),
            (0i64..=4, inner.clone(), inner).prop_map(|(k, p, q)| ProbProg::convex(rat(k, 4), p, q)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn prob_semantics_is_a_morphism(seed in any::<u64>(), p in prob_prog(), q in prob_prog(), k in 0i64..=4) {
        let t = random_table(3, 3, 4, seed).unwrap();
        let (dp, dq) = (denote(&p, &t).unwrap(), denote(&q, &t).unwrap());
        prop_assert_eq!(denote(&ProbProg::seq(p.clone(), q.clone()), &t).unwrap(), kleisli_compose::<DistM>(&dp, &dq).unwrap());
        let l = rat(k, 4);
        let spec = NatTransSpec::ConvexCombo(l);
        prop_assert_eq!(denote(&ProbProg::convex(l, p.clone(), q.clone()), &t).unwrap(), convex_kernel(&spec, &dp, &dq).unwrap());
        prop_assert_eq!(denote(&ProbProg::Skip, &t).unwrap(), unit_kernel::<DistM>(3));
        prop_assert!(dp.rows.iter().all(|d| d.total() == Rat::one()));
    }
}

fn coeff() -> impl Strategy<Value = f64> {
    (-4i32..=4).prop_map(|k| k as f64 / 4.0)
}

/// A random affine term over `x, y`.
fn term() -> impl Strategy<Value = String> {
    (coeff(), coeff(), coeff()).prop_map(|(a, b, c)| format!("{a:?}*x + {b:?}*y + {c:?}"))
}

/// Assignments and duration-triggered flows over `x, y`.
fn timed_atom(assignments: bool) -> BoxedStrategy<String> {
    let flow = (term(), term(), 0u32..=8).prop_map(|(s, t, d)| format!("(x' = {s}, y' = {t} & {})", d as f64 / 8.0));
    if assignments {
        prop_oneof![flow, (term(), term()).prop_map(|(s, t)| format!("(x := {s}, y := {t})"))].boxed()
    } else {
        flow.boxed()
    }
}

fn timed_prog(assignments: bool) -> impl Strategy<Value = String> {
    prop::collection::vec(timed_atom(assignments), 1..5).prop_map(|v| v.join(" ; "))
}

fn xy() -> Vec<String> {
    vec!["x".into(), "y".into()]
}

fn run(src: &str, mode: Mode, x0: [f64; 2]) -> Vec<kleisli_core::Traj> {
    run_hyb(&parse_hyb(src).unwrap(), &xy(), &x0, mode, &NumericConfig::default()).unwrap().trajs
}

fn same_set(a: &[kleisli_core::Traj], b: &[kleisli_core::Traj]) -> bool {
    a.len() == b.len() && a.iter().all(|t| b.contains(t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hyb_sequencing_is_associative(p in timed_prog(true), q in timed_prog(true), r in timed_prog(true), x in coeff(), y in coeff()) {
        let (p, q, r) = (parse_hyb(&p).unwrap(), parse_hyb(&q).unwrap(), parse_hyb(&r).unwrap());
        let cfg = NumericConfig::default();
        let go = |prog: HybProg| run_hyb(&prog, &xy(), &[x, y], Mode::Time, &cfg).unwrap().trajs.remove(0);
        let l = go(HybProg::seq(HybProg::seq(p.clone(), q.clone()), r.clone()));
        let rr = go(HybProg::seq(p.clone(), HybProg::seq(q.clone(), r.clone())));
        prop_assert!(l.approx_eq(&rr, 0.01, 1e-9));
        prop_assert!(go(HybProg::seq(HybProg::Skip, p.clone())).approx_eq(&go(p.clone()), 0.01, 1e-12));
        prop_assert!(go(HybProg::seq(p.clone(), HybProg::Skip)).approx_eq(&go(p), 0.01, 1e-12));
    }

    #[test]
    fn flagged_agrees_with_time_without_assignments(p in timed_prog(false), x in coeff(), y in coeff()) {
        let a = run(&p, Mode::Time, [x, y]);
        let b = run(&p, Mode::Flagged, [x, y]);
        prop_assert!(a[0].approx_eq(&b[0], 0.01, 1e-9));
    }

    #[test]
    fn nondet_union_laws(p in timed_prog(true), q in timed_prog(true), r in timed_prog(true), x in coeff()) {
        let go = |s: String| run(&s, Mode::Nondet, [x, 1.0]);
        let (pq, qp) = (go(format!("choice {{ {p} | {q} }}")), go(format!("choice {{ {q} | {p} }}")));
        prop_assert!(same_set(&pq, &qp));
        let pp = go(format!("choice {{ {p} | {p} }}"));
        prop_assert!(same_set(&pp, &go(p.clone())));
        let l = go(format!("choice {{ choice {{ {p} | {q} }} | {r} }}"));
        let rr = go(format!("choice {{ {p} | choice {{ {q} | {r} }} }}"));
        prop_assert!(same_set(&l, &rr));
    }

    #[test]
    fn emitted_time_is_monotone(p in timed_prog(true), dt in prop::sample::select(vec![0.01, 0.1, 0.3, 1.0])) {
        let r = run_hyb(&parse_hyb(&p).unwrap(), &xy(), &[0.5, -0.5], Mode::Time, &NumericConfig::default()).unwrap();
        let csv = emit_csv(&r, dt).unwrap();
        let ts: Vec<f64> = csv.lines().skip(1).map(|l| l.split(',').next().unwrap().parse().unwrap()).collect();
        prop_assert!(ts.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(ts[0], 0.0);
        prop_assert_eq!(*ts.last().unwrap(), r.trajs[0].duration());
    }

    #[test]
    fn flow_matches_a_numerical_integration(
        a in prop::collection::vec(coeff(), 4),
        b in prop::collection::vec(coeff(), 2),
        x0 in prop::collection::vec(coeff(), 2),
        t in 0.0f64..2.0,
    ) {
        let (am, bv, x0) = (DMatrix::from_row_slice(2, 2, &a), DVector::from_vec(b), DVector::from_vec(x0));
        let flow = AffineFlow::new(am.clone(), bv.clone()).unwrap();
        // classical Runge-Kutta as an independent oracle
        let f = |x: &DVector<f64>| &am * x + &bv;
        let steps = 2000;
        let h = t / steps as f64;
        let mut x = x0.clone();
        for _ in 0..steps {
            let k1 = f(&x);
            let k2 = f(&(&x + &k1 * (h / 2.0)));
            let k3 = f(&(&x + &k2 * (h / 2.0)));
            let k4 = f(&(&x + &k3 * h));
            x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        }
        prop_assert!((flow.eval(&x0, t) - &x).norm() < 1e-8 * (1.0 + x.norm()));
        let split = flow.eval(&flow.eval(&x0, t / 3.0), 2.0 * t / 3.0);
        prop_assert!((split - flow.eval(&x0, t)).norm() < 1e-9 * (1.0 + x.norm()));
    }

    /// ψ is closed, so the limit of the bisection brackets satisfies it, and
    /// no earlier scan sample does.
    #[test]
    fn event_hits_are_closed_and_minimal(
        s in term(), t in term(),
        k in (-8i32..=8).prop_map(|k| k as f64 / 4.0),
        x in coeff(), y in coeff(),
        ge in any::<bool>(),
    ) {
        let cmp = if ge { ">=" } else { "<=" };
        let src = format!("(x' = {s}, y' = {t} & x {cmp} {k:?})");
        let CProg::Flow(flow, CTrigger::Event(psi)) = compile(&parse_hyb(&src).unwrap(), &xy(), Mode::Event).unwrap() else {
            panic!("not a flow")
        };
        let cfg = NumericConfig { t_max: 5.0, ..Default::default() };
        let x0 = DVector::from_vec(vec![x, y]);
        if let HitResult::Time(d) = hit_time(&flow, &psi, &cfg, &x0) {
            prop_assert!(psi.holds(&flow.eval(&x0, d)));
            let mut j = 0u64;
            while (j as f64) * cfg.h < d - 1e-12 {
                prop_assert!(!psi.holds(&flow.eval(&x0, j as f64 * cfg.h)), "ψ held at scan sample {}", j as f64 * cfg.h);
                j += 1;
            }
        }
    }
}
