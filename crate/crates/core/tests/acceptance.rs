//! Acceptance run: one line per criterion, then a single assertion.
//!
//! The full suite runs once from scratch (no count cache), including the
//! zeta function at 17; the remaining criteria reuse its report.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use modcurve::algebra::ext::Fq;
use modcurve::algebra::prime::PrimeField;
use modcurve::curve::Divisor;
use modcurve::data;
use modcurve::fixtures::Fixtures;
use modcurve::pipeline::b5ns7::{self, Input, Options};
use modcurve::pipeline::suite::{self, SuiteOptions};
use modcurve::report::{CheckSet, Report, Verdict};
use modcurve::rr::plane::PlaneRR;
use serde_json::{json, Value};

use common::*;

type Outcome = Result<String, String>;

struct Run {
    report: Report,
    elapsed: Duration,
}

impl Run {
    fn value(&self, id: &str) -> Result<&Value, String> {
        let r = self.report.checks.iter().find(|r| r.id == id).ok_or(format!("{id} missing"))?;
        if r.verdict != Verdict::Pass {
            return Err(format!("{id} is {:?}: {}", r.verdict, r.computed));
        }
        Ok(&r.computed)
    }

    fn expect(&self, id: &str, v: Value) -> Result<(), String> {
        let got = self.value(id)?;
        if *got == v {
            Ok(())
        } else {
            Err(format!("{id}: expected {v}, got {got}"))
        }
    }

    fn all_pass(&self, prefix: &str) -> Result<usize, String> {
        let mine: Vec<_> = self.report.checks.iter().filter(|r| r.id.starts_with(prefix)).collect();
        match mine.iter().find(|r| r.verdict != Verdict::Pass) {
            Some(r) => Err(format!("{} is {:?}", r.id, r.verdict)),
            None => Ok(mine.len()),
        }
    }

    fn ms(&self, id: &str) -> u64 {
        self.report.timings.get(id).copied().unwrap_or(0)
    }
}

fn within(ms: u64, budget_s: u64) -> Result<(), String> {
    if ms <= budget_s * 1000 {
        Ok(())
    } else {
        Err(format!("{ms} ms exceeds the {budget_s} s budget"))
    }
}

fn fixture_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..").join(modcurve::fixtures::DEFAULT_PATH)
}

fn c1(run: &Run) -> Outcome {
    run.expect("x035.census.classes", json!(48))?;
    run.expect("x035.census.dim_one", json!(44))?;
    run.expect("x035.cubic.irreducible", json!(28))?;
    run.expect("x035.cubic.totally_real", json!(0))?;
    run.expect("x035.verdict", json!([48, 44, 28, 0]))?;
    let n = run.all_pass("x035.")?;
    let ms = run.ms("x035.jq") + run.ms("x035.census") + run.ms("x035.classify");
    within(ms, 300)?;
    Ok(format!("48 / 44 / 28 / 0, {n} checks, {ms} ms"))
}

fn c2(run: &Run) -> Outcome {
    run.expect("b5ns7.model.singular_points", json!(4))?;
    run.expect("b5ns7.model.nodes", json!([true, true, true, true]))?;
    run.expect("b5ns7.model.adjoint_cubics", json!(6))?;
    run.expect("b5ns7.model.w5", json!(true))?;
    within(run.ms("b5ns7.model"), 1)?;
    Ok(format!("4 ordinary nodes, 6 adjoint cubics, w5-invariant, {} ms", run.ms("b5ns7.model")))
}

fn c3(run: &Run) -> Outcome {
    run.expect("b5ns7.cusps.minpoly", json!("t^3 - 7t^2 + 7t + 7"))?;
    let n = run.all_pass("b5ns7.cusps.")?;
    within(run.ms("b5ns7.cusps"), 1)?;
    Ok(format!("{n} cusp checks, {} ms", run.ms("b5ns7.cusps")))
}

fn c4(run: &Run) -> Outcome {
    run.expect("b5ns7.zeta3.order", json!("1127"))?;
    run.expect("b5ns7.zeta3.functional_equation", json!(true))?;
    run.expect("b5ns7.zeta3.weil", json!(true))?;
    run.value("b5ns7.zeta3.places")?;
    within(run.ms("b5ns7.zeta3"), 60)?;
    Ok(format!("L(1) = 1127, {} ms", run.ms("b5ns7.zeta3")))
}

fn c5(run: &Run) -> Outcome {
    run.expect("b5ns7.jac.cusp_order", json!(7))?;
    let s = run.value("b5ns7.jac.structure")?;
    if s["invariant_factors"] != json!([7, 161]) || s["conclusive"] != json!(true) {
        return Err(format!("structure {s}"));
    }
    run.expect("b5ns7.jac.w5_relation", json!([true, true]))?;
    within(run.ms("b5ns7.jac"), 600)?;
    Ok(format!("(7, 161), order 7, relation by both routes, {} ms", run.ms("b5ns7.jac")))
}

/// Both sieve hits, with witnesses recomputed from intersection divisors.
fn c6(run: &Run) -> Outcome {
    run.expect("b5ns7.sym_cube.size", json!(40))?;
    run.expect("b5ns7.sieve.tests", json!(280))?;
    run.value("b5ns7.sieve.hits")?;
    let input = Input::default();
    let model = b5ns7::model_mod(3, &input).map_err(|e| e.to_string())?;
    let cusps = b5ns7::verify_cusps(&input, &model, &mut CheckSet::new()).map_err(|e| e.to_string())?.ok_or("cusps")?;
    let rr = PlaneRR::new(&model);
    let diff = &Divisor::place(cusps.zero.clone()) - &Divisor::place(cusps.infinity.clone());
    for (y, k) in [(&cusps.zero, 1), (&cusps.infinity, -1)] {
        let y = Divisor::place(y.clone());
        let d = &(&y - &model.apply_signs(&y, data::W5_SIGNS).map_err(|e| e.to_string())?) - &diff.scale(k);
        let (ok, w) = rr.is_principal(&d).map_err(|e| e.to_string())?;
        let (g, h) = w.ok_or("no witness")?;
        let re = &model.intersection_divisor(&g).map_err(|e| e.to_string())? - &model.intersection_divisor(&h).map_err(|e| e.to_string())?;
        if !ok || re != -&d {
            return Err(format!("witness for k = {k} does not recompute"));
        }
    }
    within(run.ms("b5ns7.sieve") + run.ms("b5ns7.sym_cube"), 1800)?;
    Ok(format!("40 points, 280 tests, hits (c0, 1) and (c_inf, -1) re-witnessed, {} ms", run.ms("b5ns7.sieve")))
}

fn c7(run: &Run) -> Outcome {
    run.expect("b5ns7.immersion.eigenspaces", json!([2, 4]))?;
    let r = run.value("b5ns7.immersion.rank")?;
    if r["rank"] != json!(3) || r["minus_dim"] != json!(4) {
        return Err(format!("certificate {r}"));
    }
    run.expect("b5ns7.immersion.invariance", json!(vec![3; 20]))?;
    within(run.ms("b5ns7.immersion"), 60)?;
    Ok(format!("dim 4, rank 3, 20 basis changes, {} ms", run.ms("b5ns7.immersion")))
}

fn c8(run: &Run, skipped: &Run) -> Outcome {
    run.expect("b5ns7.zeta17.order", json!("23052344"))?;
    run.expect("b5ns7.zeta17.functional_equation", json!(true))?;
    run.expect("b5ns7.zeta17.weil", json!(true))?;
    run.expect("b5ns7.torsion.gcd", json!(49))?;
    let r = run.value("b5ns7.torsion.refinement")?;
    if r["multiplicity"] != json!(1) || r["conclusion"] != json!("J(Q)_tors embeds in Z/7") {
        return Err(format!("refinement {r}"));
    }
    let unchecked: Vec<_> = skipped.report.checks.iter().filter(|c| c.verdict == Verdict::Unchecked).map(|c| c.id.as_str()).collect();
    if unchecked != ["b5ns7.torsion.refinement"] || skipped.report.summary != "PASS with 1 unchecked" {
        return Err(format!("skip mode: {} with {unchecked:?}", skipped.report.summary));
    }
    within(run.ms("b5ns7.zeta17"), 7200)?;
    Ok(format!(
        "L(1) = 2^3 7^3 31 271, gcd 49, multiplicity 1, {} ms; skip mode {} in {} ms",
        run.ms("b5ns7.zeta17"),
        skipped.report.summary,
        skipped.elapsed.as_millis()
    ))
}

fn c9(run: &Run) -> Outcome {
    for e in ["15a1", "15a3"] {
        run.expect(&format!("qz7.{e}.torsion"), json!([2, 4]))?;
        run.value(&format!("qz7.{e}.points"))?;
        let b = run.value(&format!("qz7.{e}.bound_k"))?;
        if b["bound"] != json!(8) {
            return Err(format!("{e}: bound {b}"));
        }
    }
    let ms = run.ms("qz7.15a1") + run.ms("qz7.15a3");
    within(ms, 10)?;
    Ok(format!("Z/2 + Z/4 with 8 points each, bound 8, {ms} ms"))
}

/// Seeded samples of every property suite.
fn c10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let plane = PlaneFixture::new();
    let hyp = HypFixture::new(3);
    let terms = |rng: &mut ChaCha8Rng, lo: i64| -> Vec<(usize, i64)> {
        (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(0..1000), rng.gen_range(lo..=3))).collect()
    };
    for _ in 0..50 {
        plane_riemann_roch(&plane, &terms(&mut rng, -2))?;
        hyp_riemann_roch(&hyp, &terms(&mut rng, -2))?;
    }
    for _ in 0..100 {
        let digits: Vec<u64> = (0..10).map(|_| rng.gen_range(0..3)).collect();
        bezout(&plane, rng.gen_range(1..=3), &digits)?;
    }
    for _ in 0..20 {
        let a: Vec<u64> = (0..6).map(|_| rng.gen_range(0..3)).collect();
        let b: Vec<u64> = (0..6).map(|_| rng.gen_range(0..3)).collect();
        plane_witness(&plane, rng.gen_range(1..=2), &a, &b)?;
        hyp_witness(&hyp, &terms(&mut rng, -2).into_iter().map(|(i, c)| (i, c.min(2))).collect::<Vec<_>>())?;
    }
    for p in [2u64, 3, 5, 7, 17] {
        let f = PrimeField::new(p).unwrap();
        for _ in 0..40 {
            field_axioms(&f, rng.gen(), rng.gen(), rng.gen())?;
        }
    }
    let small = [(2u64, 1usize), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2)];
    for (p, k) in small {
        let f = Fq::canonical(p, k).unwrap();
        for _ in 0..20 {
            field_axioms(&f, rng.gen(), rng.gen(), rng.gen())?;
            let coeffs: Vec<u64> = (0..rng.gen_range(1..=7)).map(|_| rng.gen_range(0..7)).collect();
            root_count(p, k, &coeffs)?;
        }
    }
    Ok("RR x50 per engine, Bezout x100, witnesses x20 per engine, fields and root counts up to q = 81".into())
}

fn c11() -> Outcome {
    let mut f = data::octic();
    f[1] += 1;
    let mut c = CheckSet::new();
    suite::run_x035(&f, &mut c, &mut Fixtures::default());
    let x = c.get("x035.verdict").ok_or("no x035 verdict")?;
    if x.verdict != Verdict::Fail {
        return Err("octic fault not detected".into());
    }
    let skip = Options { skip_lpoly17: true, cache_dir: None };
    let mut out = vec![format!("octic: {}", x.computed)];
    for (term, expect) in [(0, "FAIL at model"), (2, "FAIL at cusps")] {
        let input = Input { terms: data::sextic_perturbed(term, 1), ..Input::default() };
        let mut c = CheckSet::new();
        b5ns7::run(&input, &skip, &mut c).map_err(|e| e.to_string())?;
        let v = &c.get("b5ns7.verdict").ok_or("no b5ns7 verdict")?.computed;
        if *v != json!(expect) {
            return Err(format!("sextic term {term}: {v}"));
        }
        out.push(format!("sextic term {term}: {v}"));
    }
    Ok(out.join("; "))
}

#[test]
fn acceptance() {
    let t = Instant::now();
    let opts = SuiteOptions { fixtures: Some(fixture_path()), ..SuiteOptions::default() };
    let full = suite::run_all(&opts).expect("full run");
    let full = Run { report: full.report, elapsed: t.elapsed() };
    let t = Instant::now();
    let skip = suite::run_all(&SuiteOptions { skip_lpoly17: true, ..opts.clone() }).expect("skip run");
    let skip = Run { report: skip.report, elapsed: t.elapsed() };

    let results: Vec<(usize, Outcome)> = vec![
        (1, c1(&full)),
        (2, c2(&full)),
        (3, c3(&full)),
        (4, c4(&full)),
        (5, c5(&full)),
        (6, c6(&full)),
        (7, c7(&full)),
        (8, c8(&full, &skip)),
        (9, c9(&full)),
        (10, c10()),
        (11, c11()),
    ];
    println!("full run: {} in {} ms", full.report.summary, full.elapsed.as_millis());
    for (n, r) in &results {
        match r {
            Ok(msg) => println!("criterion {n:>2}: PASS  {msg}"),
            Err(msg) => println!("criterion {n:>2}: FAIL  {msg}"),
        }
    }
    assert_eq!(full.report.verdict, Verdict::Pass, "{}", full.report.summary);
    let failed: Vec<usize> = results.iter().filter(|(_, r)| r.is_err()).map(|(n, _)| *n).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
