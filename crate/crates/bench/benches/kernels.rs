use criterion::{criterion_group, criterion_main, Criterion};
use kleisli_core::hyb::{parse_hyb, run_hyb, Mode, NumericConfig};
use kleisli_core::monad::dist::DistM;
use kleisli_core::monad::{kleisli_compose, Kernel};
use kleisli_core::prob::{denote, parse_prob, random_table};
use kleisli_core::rat::rat;
use kleisli_core::suites::{run_suite, SuiteOptions};
use kleisli_core::Dist;
use std::hint::black_box;

fn uniform_kernel(n: usize) -> Kernel<Dist<usize>> {
    let rows = (0..n).map(|x| Dist::from_pairs([(x, rat(1, 2)), ((x + 1) % n, rat(1, 2))]).unwrap()).collect();
    Kernel::new(n, rows)
}

fn compose(c: &mut Criterion) {
    let k = uniform_kernel(32);
    c.bench_function("dist kleisli_compose 32", |b| b.iter(|| kleisli_compose::<DistM>(black_box(&k), black_box(&k)).unwrap()));
}

fn prob(c: &mut Criterion) {
    let t = random_table(4, 3, 4, 1).unwrap();
    let p = parse_prob("(a0 +[1/3] a1) ; (a2 +[1/2] skip) ; (a0 ; a1 +[1/4] a2)").unwrap();
    c.bench_function("prob denote", |b| b.iter(|| denote(black_box(&p), &t).unwrap()));
}

fn ball(c: &mut Criterion) {
    let b3 = "(p' = v, v' = -9.8 & p <= 0 && v <= 0) ; (v := -0.5*v, p := p)";
    let p = parse_hyb(&format!("{b3} ; {b3} ; {b3}")).unwrap();
    let vars = vec!["p".to_string(), "v".to_string()];
    let cfg = NumericConfig::default();
    c.bench_function("bouncing ball event run", |b| b.iter(|| run_hyb(black_box(&p), &vars, &[5.0, 0.0], Mode::Event, &cfg).unwrap()));
}

fn suites(c: &mut Criterion) {
    let o = SuiteOptions::default();
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    for s in ["maybe-enum", "dist-enum", "pd-impossible", "convex"] {
        g.bench_function(s, |b| b.iter(|| run_suite(s, &o).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, compose, prob, ball, suites);
criterion_main!(benches);
