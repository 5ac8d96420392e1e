//! The genus-6 pipeline with the zeta function at 17 skipped. The
//! L-polynomial is rebuilt here from the counts by Newton's identities.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use modcurve::pipeline::b5ns7::{self, Input, Options, Step};
use modcurve::report::{CheckSet, Verdict};

/// `L(T)` from `N_1..N_g` via `P_k = q^k + 1 - N_k`, `k a_k = -sum P_i a_(k-i)`
/// (power sums of the inverse roots), then `a_(2g-i) = q^(g-i) a_i`.
fn lpoly(q: i64, counts: &[u64]) -> Vec<BigInt> {
    let g = counts.len();
    let bq = BigInt::from(q);
    let p: Vec<BigInt> = (1..=g).map(|k| bq.pow(k as u32) + 1 - BigInt::from(counts[k - 1])).collect();
    let mut a = vec![BigInt::from(1)];
    for k in 1..=g {
        let s: BigInt = (1..=k).map(|i| &p[i - 1] * &a[k - i]).sum();
        assert!((&s % BigInt::from(k)).is_zero(), "non-integral a_{k}");
        a.push(-s / BigInt::from(k));
    }
    for i in (0..g).rev() {
        a.push(&a[i] * bq.pow((g - i) as u32));
    }
    a
}

#[test]
fn skip_mode_reproduces_the_published_data() {
    let mut c = CheckSet::new();
    let opts = Options { skip_lpoly17: true, cache_dir: None };
    let s = b5ns7::run(&Input::default(), &opts, &mut c).unwrap();
    let failing: Vec<_> = c.records.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    assert!(failing.is_empty(), "{failing:#?}");
    let unchecked: Vec<_> = c.records.iter().filter(|r| r.verdict == Verdict::Unchecked).map(|r| r.id.as_str()).collect();
    assert_eq!(unchecked, ["b5ns7.torsion.refinement"]);
    assert_eq!(c.get("b5ns7.verdict").unwrap().computed, "PASS except torsion refinement (unchecked)");

    let z3 = &s.zeta[0];
    assert_eq!(z3.counts, [2, 28, 32, 88, 282, 838]);
    let l = lpoly(3, &z3.counts);
    assert_eq!(l.iter().map(|x| x.to_i64().unwrap()).collect::<Vec<_>>(), z3.lpoly);
    assert_eq!(l.iter().sum::<BigInt>(), BigInt::from(1127));
    assert_eq!(s.invariant_factors, [7, 161]);
    assert_eq!(s.sym_cube, 40);
    assert_eq!(s.hits, [("c0".to_string(), 1), ("c_inf".to_string(), -1)]);
    assert_eq!(s.immersion_rank, Some(3));
}

#[test]
fn single_steps() {
    for step in [Step::Model, Step::Cusps, Step::FormalImmersion] {
        let mut c = CheckSet::new();
        assert!(b5ns7::run_step(step, &Input::default(), &Options::default(), &mut c).unwrap(), "{step:?}");
    }
}

#[test]
fn small_prime_counts_respect_weil() {
    let mut c = CheckSet::new();
    assert!(b5ns7::lpoly(11, 2, &Input::default(), &Options::default(), &mut c).unwrap());
    let mut bad = CheckSet::new();
    assert!(!b5ns7::lpoly(5, 2, &Input::default(), &Options::default(), &mut bad).unwrap());
}
