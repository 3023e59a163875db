//! Named verification suites, one per claim checked by the command line and
//! the acceptance tests. Each returns a [`SuiteReport`].

use crate::abstraction::{check_abstraction, programs_upto};
use crate::axioms::{absorption_suite, maybe_classification, ExtFragment};
use crate::combine::{
    check_distributive_law, full_powerset_counterexample, hq_law_report, ite_axiom_suite, pd_no_monad_replay,
    qh_union_report, DistLawFragment, DistLawReport,
};
use crate::error::{Error, Result};
use crate::monad::composite::{MaybeLaw, MaybeT};
use crate::monad::discrete::{DiscreteHybridM, DurationBounds};
use crate::monad::dist::{Dist, DistBounds, DistM};
use crate::monad::maybe::MaybeM;
use crate::monad::multiset::{MultiSetBounds, MultiSetM, Natural};
use crate::monad::powerset::{NonEmptyPowerSetM, PowerSetM, SetBounds};
use crate::monad::{check_monad_laws, Kernel, LawFragment, LawReport};
use crate::nat::spec::{agrees_with, convex_weight_of, shrink_table_of};
use crate::nat::{
    enumerate_natural, orbits, CoprodCoords, FinFunctor, FinMap, MaybeCode, MonadF, NatTransSpec, Power, Shape,
    TableFamily,
};
use crate::prob::{convex_semiring_suite, random_table, AtomTable, ConvexFragment};
use crate::rat::{rat, Rat};
use crate::report::SuiteReport;
use std::collections::BTreeSet;
use std::fmt::Debug;

pub const SUITES: [&str; 12] = [
    "maybe-enum",
    "powerset-enum",
    "dist-enum",
    "monad-laws",
    "dist-law",
    "ite",
    "hq",
    "pd-impossible",
    "convex",
    "absorption",
    "orbits",
    "abstraction",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    /// Overrides the suite's default largest carrier.
    pub max_carrier: Option<usize>,
    pub seed: u64,
    pub samples: usize,
    /// Search budget in nodes.
    pub budget: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { max_carrier: None, seed: 42, samples: 1000, budget: 10_000_000 }
    }
}

pub fn run_suite(name: &str, o: &SuiteOptions) -> Result<SuiteReport> {
    match name {
        "maybe-enum" => maybe_enum(o),
        "powerset-enum" => powerset_enum(o),
        "dist-enum" => dist_enum(o),
        "monad-laws" => monad_laws(o),
        "dist-law" => dist_law(o),
        "ite" => ite(o),
        "hq" => hq(o),
        "pd-impossible" => pd_impossible(o),
        "convex" => convex(o),
        "absorption" => absorption(o),
        "orbits" => orbit_suite(o),
        "abstraction" => abstraction(o),
        _ => Err(Error::InvalidValue(format!("unknown suite `{name}`; known: {}", SUITES.join(", ")))),
    }
}

pub fn maybe_enum(o: &SuiteOptions) -> Result<SuiteReport> {
    let n = o.max_carrier.unwrap_or(3);
    let c = maybe_classification(n, o.budget)?;
    let mut rep = SuiteReport::new("maybe-enum");
    rep.count("max_carrier", n);
    rep.count("families", c.codes.len());
    rep.count("commutative", c.commutative.len());
    rep.count("idempotent", c.idempotent.len());
    rep.count("both", c.both.len());
    rep.count("bottom_unit", c.unital.len());
    rep.note(format!(
        "{} families; commutative {}; idempotent {}; both {}",
        c.codes.len(),
        c.commutative.len(),
        c.idempotent.len(),
        c.both.len()
    ));
    let show = |v: &[MaybeCode]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
    rep.note(format!("codes: {}", show(&c.codes)));
    rep.note(format!("with ⊥ as unit: {}", show(&c.unital)));
    rep.check(c.complete, || "search incomplete".into());
    let got = (c.codes.len(), c.commutative.len(), c.idempotent.len(), c.both.len(), c.unital.len());
    rep.check(got == (12, 2, 8, 0, 3), || format!("expected (12, 2, 8, 0, 3), got {got:?}"));
    Ok(rep)
}

pub fn powerset_enum(o: &SuiteOptions) -> Result<SuiteReport> {
    let n = o.max_carrier.unwrap_or(3);
    let p = MonadF::<PowerSetM>::new(SetBounds::default());
    let e = enumerate_natural(&Power { inner: p.clone(), arity: 2 }, &p, n, |_, _, _| true, o.budget);
    let mut rep = SuiteReport::new("powerset-enum");
    rep.count("max_carrier", n);
    rep.count("families", e.families.len());
    rep.count("search_nodes", e.search_nodes);
    rep.check(e.complete, || "search incomplete".into());
    let mut tables = BTreeSet::new();
    for f in &e.families {
        let t = shrink_table_of::<MonadF<PowerSetM>, _>(2, f)?;
        let spec = NatTransSpec::powerset_shrink(2, t.clone());
        rep.check(spec.as_ref().is_ok_and(|s| agrees_with(f, s)), || format!("family with table {t:?} is not the shrink it induces"));
        tables.insert(t);
    }
    let all: BTreeSet<Vec<u32>> = NatTransSpec::all_shrinks(2).into_iter().collect();
    rep.count("shrink_maps", all.len());
    rep.check(e.families.len() == 16 && tables == all, || {
        format!("{} families, {} distinct tables, {} shrink maps", e.families.len(), tables.len(), all.len())
    });
    Ok(rep)
}

fn symmetric<V: Clone + Ord + Debug>(f: &TableFamily<Vec<V>, V>) -> bool {
    f.entries.iter().all(|((n, args), v)| f.get(*n, &vec![args[1].clone(), args[0].clone()]) == Some(v))
}

fn idempotent<V: Clone + Ord + Debug>(f: &TableFamily<Vec<V>, V>) -> bool {
    f.entries.iter().filter(|((_, a), _)| a[0] == a[1]).all(|((_, a), v)| *v == a[0])
}

pub fn dist_enum(o: &SuiteOptions) -> Result<SuiteReport> {
    let n = o.max_carrier.unwrap_or(3);
    let d = Power { inner: MonadF::<DistM>::new(DistBounds::dividing(6)), arity: 2 };
    let c = MonadF::<DistM>::new(DistBounds::dividing(36));
    let e = enumerate_natural(&d, &c, n, |_, _, _| true, o.budget);
    let mut rep = SuiteReport::new("dist-enum");
    rep.count("max_carrier", n);
    rep.count("families", e.families.len());
    rep.check(e.complete, || "search incomplete".into());
    let mut lambdas = vec![];
    let mut commutative = vec![];
    for f in &e.families {
        let Some(l) = convex_weight_of::<MonadF<DistM>, _>(f) else {
            rep.check(false, || "family undefined on the generic pair".into());
            continue;
        };
        rep.check(agrees_with(f, &NatTransSpec::ConvexCombo(l)), || format!("family with weight {l} is not ConvexCombo({l})"));
        rep.check(idempotent(f), || format!("ConvexCombo({l}) fails idempotence on the fragment"));
        if symmetric(f) {
            commutative.push(l);
        }
        lambdas.push(l);
    }
    lambdas.sort();
    let all: Vec<Rat> = (0..=6).map(|k| rat(k, 6)).collect();
    rep.count("lambdas", lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
    rep.count("commutative", commutative.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "));
    rep.check(lambdas == all, || format!("expected λ ∈ {{0, 1/6, …, 1}}, got {lambdas:?}"));
    rep.check(commutative == vec![rat(1, 2)], || format!("commutative weights {commutative:?}"));
    Ok(rep)
}

fn law_line(rep: &mut SuiteReport, key: &str, r: &LawReport) {
    rep.count(&format!("{key}.unit_values"), r.unit_values);
    rep.count(&format!("{key}.assoc_values"), r.assoc_values);
    rep.check(r.passed(), || format!("{key}: {:?}", r.witness));
}

pub fn monad_laws(_o: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("monad-laws");
    let g = 2_000_000;
    let r = check_monad_laws::<MaybeM>(&LawFragment { max_carrier: 3, unit_bounds: (), assoc_bounds: [(), (), ()], guard: g })?;
    law_line(&mut rep, "maybe", &r);
    let b = DistBounds::dividing(2);
    let r = check_monad_laws::<DistM>(&LawFragment {
        max_carrier: 3,
        unit_bounds: DistBounds::dividing(4),
        assoc_bounds: [b, b.support(2), b.support(2)],
        guard: g,
    })?;
    law_line(&mut rep, "dist", &r);
    let r = check_monad_laws::<MultiSetM<Natural>>(&LawFragment {
        max_carrier: 2,
        unit_bounds: MultiSetBounds::up_to(3),
        assoc_bounds: [MultiSetBounds::up_to(3), MultiSetBounds::up_to(2).support(2), MultiSetBounds::up_to(2).support(2)],
        guard: g,
    })?;
    law_line(&mut rep, "multiset", &r);
    let r = check_monad_laws::<DiscreteHybridM>(&LawFragment {
        max_carrier: 2,
        unit_bounds: DurationBounds::upto(2),
        assoc_bounds: [DurationBounds::upto(2), DurationBounds::upto(1), DurationBounds::upto(1)],
        guard: g,
    })?;
    law_line(&mut rep, "hybrid", &r);
    let r = check_monad_laws::<MaybeT<DistM>>(&LawFragment {
        max_carrier: 2,
        unit_bounds: b,
        assoc_bounds: [b, b.support(2), b.support(2)],
        guard: g,
    })?;
    law_line(&mut rep, "dist_maybe", &r);
    Ok(rep)
}

fn dist_law_line(rep: &mut SuiteReport, key: &str, r: &DistLawReport) {
    rep.count(&format!("{key}.checked"), format!("{:?}", r.checked));
    rep.check(r.passed() && r.checked.iter().all(|c| *c > 0), || format!("{key}: {:?}", r.witness));
}

pub fn dist_law(_o: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("dist-law");
    let b = DistBounds::dividing(2);
    let r = check_distributive_law::<MaybeLaw<DistM>>(&DistLawFragment {
        max_carrier: 2,
        inner: (),
        outer: b,
        inner_nested: (),
        outer_nested: b.support(2),
    })?;
    dist_law_line(&mut rep, "dist", &r);
    let r = check_distributive_law::<MaybeLaw<MultiSetM<Natural>>>(&DistLawFragment {
        max_carrier: 2,
        inner: (),
        outer: MultiSetBounds::up_to(3),
        inner_nested: (),
        outer_nested: MultiSetBounds::up_to(2).support(2),
    })?;
    dist_law_line(&mut rep, "multiset", &r);
    let r = check_distributive_law::<MaybeLaw<DiscreteHybridM>>(&DistLawFragment {
        max_carrier: 2,
        inner: (),
        outer: DurationBounds::upto(2),
        inner_nested: (),
        outer_nested: DurationBounds::upto(1),
    })?;
    dist_law_line(&mut rep, "hybrid", &r);
    let r = check_distributive_law::<MaybeLaw<NonEmptyPowerSetM>>(&DistLawFragment {
        max_carrier: 2,
        inner: (),
        outer: SetBounds::default(),
        inner_nested: (),
        outer_nested: SetBounds::size(2),
    })?;
    dist_law_line(&mut rep, "nonempty_powerset", &r);
    Ok(rep)
}

pub fn ite(o: &SuiteOptions) -> Result<SuiteReport> {
    let n = o.max_carrier.unwrap_or(3);
    let r = ite_axiom_suite(n, n + 1, o.samples, o.seed)?;
    let mut rep = SuiteReport::new("ite");
    rep.count("max_exhaustive_carrier", n);
    rep.count("random_carrier", n + 1);
    for (k, v) in &r.counts {
        rep.count(k, *v);
    }
    for f in r.failures.iter().take(5) {
        rep.check(false, || f.clone());
    }
    rep.check(r.passed(), || format!("{} failures", r.failures.len()));
    Ok(rep)
}

pub fn hq(o: &SuiteOptions) -> Result<SuiteReport> {
    let n = o.max_carrier.unwrap_or(2);
    let mut rep = SuiteReport::new("hq");
    let r = hq_law_report(n, 2, 1)?;
    dist_law_line(&mut rep, "nonempty", &r);
    let (full, theta) = full_powerset_counterexample(n, 2, 1)?;
    rep.count("full.checked", format!("{:?}", full.checked));
    match (&full.witness, &theta) {
        (Some(w), Some(t)) => {
            rep.count("full.failing_law", w.law);
            rep.exhibit(format!("full powerset: {} fails on {}", w.law, w.input));
            rep.exhibit(format!("full powerset: {t}"));
        }
        _ => rep.check(false, || "the full powerset variant produced no counterexample".into()),
    }
    let u = qh_union_report(n, 1, 2)?;
    rep.count("union.values", u.values);
    rep.count("union.commutative", u.commutative);
    rep.count("union.idempotent", u.idempotent);
    rep.count("union.associative", u.associative);
    rep.check(u.commutative && u.idempotent && u.associative, || format!("{u:?}"));
    rep.check(u.unit.is_none(), || format!("unexpected unit {:?}", u.unit));
    Ok(rep)
}

pub fn pd_impossible(_o: &SuiteOptions) -> Result<SuiteReport> {
    let r = pd_no_monad_replay()?;
    let mut rep = SuiteReport::new("pd-impossible");
    rep.count("unit_families", r.unit_families.len());
    rep.note(format!("units: {}", r.unit_families.join("; ")));
    for u in &r.units {
        for c in &u.constraints {
            rep.note(format!("{}: {} admissible", c.name, c.admissible));
        }
        rep.count(&format!("intersection[{}]", u.unit), u.intersection);
        rep.exhibit(format!("{}: {}", u.unit, u.witness));
    }
    rep.check(r.contradiction(), || format!("{r:?}"));
    Ok(rep)
}

/// The table used by the convex suite: three atoms on three states with
/// weights in quarters.
pub fn convex_table(seed: u64) -> Result<AtomTable> {
    random_table(3, 3, 4, seed)
}

pub fn convex(o: &SuiteOptions) -> Result<SuiteReport> {
    let t = convex_table(o.seed)?;
    convex_semiring_suite(&t, &ConvexFragment { samples: o.samples, seed: o.seed, ..Default::default() })
}

pub fn absorption(o: &SuiteOptions) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("absorption");
    let n = o.max_carrier.unwrap_or(2);
    let mut df = ExtFragment::new(n, DistBounds::dividing(2));
    df.seed = o.seed;
    let (right, left) = absorption_suite::<MaybeT<DistM>>(0, &df, |_| true)?;
    rep.count("dist_maybe.zero_seq_p.instances", right.instances);
    rep.count("dist_maybe.p_seq_zero.instances", left.instances);
    rep.check(right.holds(), || format!("D∘Maybe 0;p: {:?}", right.witness));
    rep.check(left.holds(), || format!("D∘Maybe p;0: {:?}", left.witness));

    let d = 2;
    let mut hf = ExtFragment::new(n, DurationBounds::upto(d));
    hf.seed = o.seed;
    let positive = |ks: &[Kernel<crate::DiscreteTraj<crate::Maybe<usize>>>]| ks[0].rows.iter().any(|t| t.duration() > 0);
    for zero in 0..=d {
        let (right, left) = absorption_suite::<MaybeT<DiscreteHybridM>>(zero, &hf, positive)?;
        rep.count(&format!("hybrid_maybe.zero{zero}.zero_seq_p.instances"), right.instances);
        rep.check(right.holds(), || format!("H∘Maybe 0_{zero};p: {:?}", right.witness));
        match &left.witness {
            Some(w) if zero == 0 => {
                rep.count("hybrid_maybe.p_seq_zero", "fails");
                rep.exhibit(format!("H∘Maybe p;0 ≠ 0: {w}"));
            }
            Some(_) => {}
            None => rep.check(false, || format!("H∘Maybe p;0_{zero} = 0_{zero} held on every instance")),
        }
    }
    Ok(rep)
}

fn orbit_labels<F: FinFunctor>(f: &F, n: usize) -> (usize, Vec<String>) {
    let o = orbits(f, n);
    (o.len(), o.orbits.iter().map(|o| format!("{:?}", o.label)).collect())
}

pub fn orbit_suite(o: &SuiteOptions) -> Result<SuiteReport> {
    let n = o.max_carrier.unwrap_or(3);
    let mut rep = SuiteReport::new("orbits");
    let (k, _) = orbit_labels(&MonadF::<DistM>::new(DistBounds::at_most(4)), n);
    rep.count("dist", k);
    rep.check(k == 1, || format!("Dist: {k} orbits"));

    let sub = MonadF::<MaybeT<DistM>>::new(DistBounds::at_most(4));
    let decomposition = orbits(&sub, n);
    let masses: BTreeSet<Rat> = decomposition
        .orbits
        .iter()
        .filter_map(|o| o.label.as_ref().map(|d: &Dist<crate::Maybe<usize>>| Rat::from(1) - d.weight(&crate::Maybe::Bottom)))
        .collect();
    let present: BTreeSet<Rat> = (0..=n)
        .flat_map(|m| sub.values(m))
        .map(|d| Rat::from(1) - d.weight(&crate::Maybe::Bottom))
        .collect();
    rep.count("subdist", decomposition.len());
    rep.count("subdist.masses", masses.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" "));
    rep.check(decomposition.len() == masses.len() && masses == present, || "subdistribution orbits are not labelled by mass".into());

    // Entries weigh at most 3, so an element whose component masses exceed 3
    // cannot reach the one-point carrier inside the fragment. Those orbits are
    // truncation artefacts; every other orbit must carry its own mass pair.
    let ms = Power { inner: MonadF::<MultiSetM<Natural>>::new(MultiSetBounds::up_to(3)), arity: 2 };
    let decomposition = orbits(&ms, n.min(2));
    let mut labelled = BTreeSet::new();
    let mut stray = 0;
    for orbit in &decomposition.orbits {
        match &orbit.label {
            Some(v) => {
                rep.check(labelled.insert((v[0].total(), v[1].total())), || format!("two orbits share the mass pair of {v:?}"));
                let masses = (v[0].total(), v[1].total());
                rep.check(orbit.members.iter().all(|(_, m)| (m[0].total(), m[1].total()) == masses), || {
                    format!("orbit labelled {masses:?} mixes masses")
                });
            }
            None => {
                stray += 1;
                rep.check(orbit.members.iter().all(|(_, m)| m[0].total() > 3 || m[1].total() > 3), || {
                    "an unlabelled orbit has an element within the weight bound".into()
                });
            }
        }
    }
    rep.count("multiset_pairs.labelled", labelled.len());
    rep.count("multiset_pairs.truncated", stray);
    rep.check(labelled.len() == 16, || format!("{} labelled orbits, expected one per mass pair in 0..=3 squared", labelled.len()));
    Ok(rep)
}

/// Parity quotient `4 → 2` with atoms that respect parity.
pub fn parity_instance() -> Result<(FinMap, AtomTable, AtomTable)> {
    let q = FinMap { table: vec![0, 1, 0, 1], codomain: 2 };
    let mut x = AtomTable::new((0..4).map(|i| i.to_string()).collect())?;
    let mut y = AtomTable::new(vec!["even".into(), "odd".into()])?;
    let d = |pairs: Vec<(usize, Rat)>| Dist::from_pairs(pairs);
    // step: +1 or +2 with equal odds
    let step = (0..4).map(|i| d(vec![((i + 1) % 4, rat(1, 2)), ((i + 2) % 4, rat(1, 2))])).collect::<Result<Vec<_>>>()?;
    x.add_total_atom("step", &Kernel::new(4, step))?;
    y.add_total_atom("step", &Kernel::new(2, vec![d(vec![(0, rat(1, 2)), (1, rat(1, 2))])?; 2]))?;
    // jump: to an even state, weights depend on the state but not the parity mass
    let jump = (0..4).map(|i| d(vec![(0, rat(1 + (i as i64 % 2), 4)), (2, rat(3 - (i as i64 % 2), 4))])).collect::<Result<Vec<_>>>()?;
    x.add_total_atom("jump", &Kernel::new(4, jump))?;
    y.add_total_atom("jump", &Kernel::new(2, vec![Dist::point(0); 2]))?;
    // flip: to the other parity, uniformly
    let flip = (0..4).map(|i| d(vec![((i + 1) % 4, rat(1, 3)), ((i + 3) % 4, rat(2, 3))])).collect::<Result<Vec<_>>>()?;
    x.add_total_atom("flip", &Kernel::new(4, flip))?;
    y.add_total_atom("flip", &Kernel::new(2, vec![Dist::point(1), Dist::point(0)]))?;
    Ok((q, x, y))
}

pub fn abstraction(_o: &SuiteOptions) -> Result<SuiteReport> {
    let (q, x, y) = parity_instance()?;
    let atoms: Vec<String> = x.atoms.keys().cloned().collect();
    let programs = programs_upto(&atoms, &[rat(1, 2), rat(1, 3)], 3);
    let r = check_abstraction(&q, &x, &y, &programs)?;
    let mut rep = SuiteReport::new("abstraction");
    rep.count("atoms", r.atoms_checked);
    rep.count("programs", r.programs_checked);
    for w in r.premise_failures.iter().chain(&r.law_failures).take(5) {
        rep.check(false, || w.clone());
    }
    Ok(rep)
}

/// A summary of `enumerate_natural` for a named monad.
pub fn enumerate_by_name(monad: &str, arity: usize, max_carrier: usize, denominator: u64, budget: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("enumerate");
    rep.count("monad", monad);
    rep.count("arity", arity);
    rep.count("max_carrier", max_carrier);
    let mut finish = |complete: bool, nodes: u64, descriptions: Vec<String>| {
        rep.count("families", descriptions.len());
        rep.count("search_nodes", nodes);
        rep.count("complete", complete);
        rep.check(complete, || "search budget exhausted; the list is partial".into());
        for d in descriptions {
            rep.note(d);
        }
    };
    match monad {
        "maybe" => {
            let m = MonadF::<MaybeM>::new(());
            let e = enumerate_natural(&Power { inner: m.clone(), arity }, &m, max_carrier, |_, _, _| true, budget);
            let ds = e
                .families
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    if arity == 2 {
                        let code = CoprodCoords::from_family::<MonadF<MaybeM>, _>(Shape::Maybe, f).ok().and_then(|c| MaybeCode::from_coords(&c));
                        if let Some(c) = code {
                            return format!("#{i}: MaybeCode{c}");
                        }
                    }
                    format!("#{i}: table with {} entries", f.entries.len())
                })
                .collect();
            finish(e.complete, e.search_nodes, ds);
        }
        "powerset" | "nonempty-powerset" => {
            let ds;
            let (complete, nodes);
            if monad == "powerset" {
                let p = MonadF::<PowerSetM>::new(SetBounds::default());
                let e = enumerate_natural(&Power { inner: p.clone(), arity }, &p, max_carrier, |_, _, _| true, budget);
                ds = e
                    .families
                    .iter()
                    .enumerate()
                    .map(|(i, f)| match shrink_table_of::<MonadF<PowerSetM>, _>(arity, f) {
                        Ok(t) => format!("#{i}: shrink {t:?}"),
                        Err(_) => format!("#{i}: table with {} entries", f.entries.len()),
                    })
                    .collect();
                (complete, nodes) = (e.complete, e.search_nodes);
            } else {
                let p = MonadF::<NonEmptyPowerSetM>::new(SetBounds::default());
                let e = enumerate_natural(&Power { inner: p.clone(), arity }, &p, max_carrier, |_, _, _| true, budget);
                ds = e.families.iter().enumerate().map(|(i, f)| format!("#{i}: table with {} entries", f.entries.len())).collect();
                (complete, nodes) = (e.complete, e.search_nodes);
            }
            finish(complete, nodes, ds);
        }
        "dist" => {
            let d = Power { inner: MonadF::<DistM>::new(DistBounds::dividing(denominator)), arity };
            let c = MonadF::<DistM>::new(DistBounds::dividing(denominator.pow(arity.max(1) as u32)));
            let e = enumerate_natural(&d, &c, max_carrier, |_, _, _| true, budget);
            let ds = e
                .families
                .iter()
                .enumerate()
                .map(|(i, f)| match (arity, convex_weight_of::<MonadF<DistM>, _>(f)) {
                    (2, Some(l)) if agrees_with(f, &NatTransSpec::ConvexCombo(l)) => format!("#{i}: ConvexCombo({l})"),
                    _ => format!("#{i}: table with {} entries", f.entries.len()),
                })
                .collect();
            finish(e.complete, e.search_nodes, ds);
        }
        _ => return Err(Error::InvalidValue(format!("enumeration supports maybe, powerset, nonempty-powerset, dist; got `{monad}`"))),
    }
    Ok(rep)
}

/// A summary of the orbit decomposition for a named monad.
pub fn orbits_by_name(monad: &str, arity: usize, max_carrier: usize, bound: u64) -> Result<SuiteReport> {
    let mut rep = SuiteReport::new("orbits");
    rep.count("monad", monad);
    rep.count("arity", arity);
    rep.count("max_carrier", max_carrier);
    let (k, labels) = match monad {
        "maybe" => orbit_labels(&Power { inner: MonadF::<MaybeM>::new(()), arity }, max_carrier),
        "dist" => orbit_labels(&Power { inner: MonadF::<DistM>::new(DistBounds::at_most(bound)), arity }, max_carrier),
        "subdist" => orbit_labels(&Power { inner: MonadF::<MaybeT<DistM>>::new(DistBounds::at_most(bound)), arity }, max_carrier),
        "multiset" => {
            orbit_labels(&Power { inner: MonadF::<MultiSetM<Natural>>::new(MultiSetBounds::up_to(bound)), arity }, max_carrier)
        }
        "powerset" => orbit_labels(&Power { inner: MonadF::<PowerSetM>::new(SetBounds::default()), arity }, max_carrier),
        _ => return Err(Error::InvalidValue(format!("orbits support maybe, dist, subdist, multiset, powerset; got `{monad}`"))),
    };
    rep.count("orbits", k);
    for l in labels {
        rep.note(format!("label {l}"));
    }
    Ok(rep)
}
