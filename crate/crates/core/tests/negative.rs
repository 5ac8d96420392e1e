//! Fault injection, cache damage, fixture drift and reproducibility.

use std::fs;

use modcurve::curve::cache::CountCache;
use modcurve::data;
use modcurve::fixtures::Fixtures;
use modcurve::pipeline::b5ns7::{self, Input, Options};
use modcurve::pipeline::suite::{self, SuiteOptions};
use modcurve::report::{CheckSet, Verdict};

fn first_failure(c: &CheckSet) -> Option<&str> {
    c.records.iter().find(|r| r.verdict == Verdict::Fail).map(|r| r.id.as_str())
}

fn skip() -> Options {
    Options { skip_lpoly17: true, cache_dir: None }
}

#[test]
fn octic_faults_fail_at_the_reduction_check() {
    for i in 0..8 {
        for delta in [1, -1] {
            let mut f = data::octic();
            f[i] += delta;
            let mut c = CheckSet::new();
            suite::run_x035(&f, &mut c, &mut Fixtures::default());
            assert_eq!(c.get("x035.verdict").unwrap().verdict, Verdict::Fail, "coefficient {i} shifted by {delta}");
            let first = first_failure(&c).unwrap();
            assert!(first.starts_with("x035.j"), "coefficient {i}: first failure {first}");
        }
    }
}

/// Terms divisible by `u^2 v^2` keep all four nodes and the symmetry, so
/// only the cusps notice them.
#[test]
fn sextic_faults_fail_at_the_earliest_dependent_check() {
    for (i, (e, _)) in data::SEXTIC_TERMS.iter().enumerate() {
        let input = Input { terms: data::sextic_perturbed(i, 1), ..Input::default() };
        let mut c = CheckSet::new();
        b5ns7::run(&input, &skip(), &mut c).unwrap();
        let expect = if e[0] >= 2 && e[1] >= 2 { "FAIL at cusps" } else { "FAIL at model" };
        assert_eq!(c.get("b5ns7.verdict").unwrap().computed, expect, "term {e:?}");
        let first = first_failure(&c).unwrap();
        assert!(first.starts_with(if expect.ends_with("model") { "b5ns7.model." } else { "b5ns7.cusps." }), "{first}");
    }
}

#[test]
fn cusp_faults_fail_at_cusps() {
    for (k, j) in [(0usize, 0usize), (0, 2), (1, 1), (2, 0)] {
        let mut input = Input::default();
        input.cusp_infinity[k][j] -= 1;
        let mut c = CheckSet::new();
        b5ns7::run(&input, &skip(), &mut c).unwrap();
        assert_eq!(c.get("b5ns7.verdict").unwrap().computed, "FAIL at cusps");
    }
}

#[test]
fn damaged_cache_is_recounted() {
    let dir = tempfile::tempdir().unwrap();
    let opts = Options { skip_lpoly17: true, cache_dir: Some(dir.path().into()) };
    let model = b5ns7::model_mod(3, &Input::default()).unwrap();
    let run = || {
        let mut c = CheckSet::new();
        let z = b5ns7::zeta(&model, b5ns7::ORDER_F3, &opts, &mut c).unwrap().unwrap();
        (z, c.all_pass())
    };
    let (fresh, ok) = run();
    assert!(ok && fresh.from_cache == 0);
    let (cached, ok) = run();
    assert!(ok && cached.from_cache == 6 && cached.counts == fresh.counts);

    let path = CountCache::new(dir.path(), &model).path().to_path_buf();
    let text = fs::read_to_string(&path).unwrap();
    fs::write(&path, text.replace("3 4 88", "3 4 89")).unwrap();
    let (recounted, ok) = run();
    assert!(ok && recounted.from_cache == 0 && recounted.counts == fresh.counts);
    fs::write(&path, "garbage").unwrap();
    assert_eq!(run().0.counts, fresh.counts);
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let report = |n: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(n).build().unwrap();
        pool.install(|| {
            let mut c = CheckSet::new();
            b5ns7::run(&Input::default(), &skip(), &mut c).unwrap();
            suite::run_x035(&data::octic(), &mut c, &mut Fixtures::default());
            c.into_report().to_canonical_json()
        })
    };
    assert_eq!(report(1), report(4));
}

#[test]
fn suite_is_reproducible_and_fixtures_are_compared() {
    let dir = tempfile::tempdir().unwrap();
    let fixtures = dir.path().join("regression.json");
    let opts = SuiteOptions { skip_lpoly17: true, fixtures: Some(fixtures.clone()), ..SuiteOptions::default() };

    // no fixture file: published checks alone decide
    let a = suite::run_all(&opts).unwrap();
    assert_eq!(a.report.summary, "PASS with 1 unchecked");
    assert!(!fixtures.exists());
    assert!(a.report.checks.iter().all(|r| !r.id.starts_with("fixture.")));

    // identical inputs give byte-identical reports
    let b = suite::run_all(&opts).unwrap();
    assert_eq!(a.report.to_canonical_json(), b.report.to_canonical_json());

    // a drifted value is reported under its own name
    let mut drifted = a.fixtures.clone();
    drifted.insert("b5ns7.counts.3", [2, 28, 32, 88, 282, 839]);
    drifted.write(&fixtures).unwrap();
    let c = suite::run_all(&opts).unwrap();
    assert_eq!(c.report.verdict, Verdict::Fail);
    let failed: Vec<_> = c.report.checks.iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.id.as_str()).collect();
    assert_eq!(failed, ["fixture.b5ns7.counts.3"]);

    // fixtures are not rewritten without the flag, and never after a failure
    assert_eq!(Fixtures::load(&fixtures).unwrap().unwrap(), drifted);
    let write = SuiteOptions { write_fixtures: true, octic: vec![0; 9], ..opts.clone() };
    assert!(suite::run_all(&write).is_err());
    assert_eq!(Fixtures::load(&fixtures).unwrap().unwrap(), drifted);
}
