//! Census and classification on `X_0(35)`, with the irreducible records
//! re-checked by arithmetic written here: `r^2 = f mod m`, no rational root
//! of `m`, and the sign of the cubic discriminant for the real roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use modcurve::data;
use modcurve::pipeline::x035::{self, Shape};
use modcurve::report::{CheckSet, Verdict};

type Q = BigRational;

fn q(s: &str) -> Q {
    s.parse().unwrap()
}

fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Remainder modulo a monic polynomial.
fn rem_monic(a: &[Q], m: &[Q]) -> Vec<Q> {
    let mut a = a.to_vec();
    let d = m.len() - 1;
    while a.len() > d {
        let c = a.pop().unwrap();
        let shift = a.len() - d;
        for (i, mi) in m[..d].iter().enumerate() {
            a[shift + i] -= &c * mi;
        }
    }
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn eval(a: &[Q], x: &Q) -> Q {
    a.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

/// Rational root test on the integral multiple of a monic cubic.
fn has_rational_root(m: &[Q]) -> bool {
    let l = m.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = m.iter().map(|c| (c * Q::from_integer(l.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return true;
    }
    for num in divisors(&ints[0]) {
        for den in divisors(&ints[3]) {
            for s in [1, -1] {
                let x = Q::new(BigInt::from(s) * &num, den.clone());
                if eval(m, &x).is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

fn cubic_discriminant(m: &[Q]) -> Q {
    let (d, c, b, a) = (&m[0], &m[1], &m[2], &m[3]);
    let k = |n: i64| Q::from_integer(BigInt::from(n));
    k(18) * a * b * c * d - k(4) * b * b * b * d + b * b * c * c - k(4) * a * c * c * c - k(27) * a * a * d * d
}

#[test]
fn census_counts_and_cubic_fields() {
    let mut checks = CheckSet::new();
    let (summary, census, records) = x035::run(&data::octic(), &mut checks).unwrap();
    assert!(checks.records.iter().all(|r| r.verdict == Verdict::Pass), "{:#?}", checks.records);
    assert_eq!((summary.classes, summary.dim_one, summary.irreducible, summary.totally_real), (48, 44, 28, 0));
    assert_eq!(census.len(), 48);
    assert!(census.iter().all(|e| e.dim == 1 || e.dim == 2));
    assert_eq!(records.len(), 44);

    let f: Vec<Q> = data::octic().iter().map(|c| Q::from_integer(BigInt::from(*c))).collect();
    for r in records.iter().filter(|r| r.shape == Shape::Irreducible) {
        let m: Vec<Q> = r.m.iter().map(|s| q(s)).collect();
        let y: Vec<Q> = r.r.as_ref().unwrap().iter().map(|s| q(s)).collect();
        assert_eq!(m.len(), 4);
        let lhs = rem_monic(&mul(&y, &y), &m);
        assert_eq!(lhs, rem_monic(&f, &m), "r^2 != f mod m for D'({}, {})", r.a, r.b);
        assert!(!has_rational_root(&m));
        assert!(cubic_discriminant(&m).is_negative(), "D'({}, {}) has a totally real field", r.a, r.b);
        assert_eq!(r.real_roots, Some(1));
    }
    for r in records.iter().filter(|r| r.shape == Shape::Reducible) {
        let m: Vec<Q> = r.m.iter().map(|s| q(s)).collect();
        let affine_cubic = m.len() == 4 && r.inf_plus == 0 && r.inf_minus == 0;
        assert!(!affine_cubic || has_rational_root(&m), "D'({}, {}) marked reducible", r.a, r.b);
    }
}

#[test]
fn jq_consistency_mod_3() {
    let mut checks = CheckSet::new();
    assert!(x035::check_jq_mod_p(&data::octic(), &mut checks).unwrap());
    let get = |id: &str| checks.get(id).unwrap().computed.clone();
    assert_eq!(get("x035.jq.order_inf"), 24);
    assert_eq!(get("x035.jq.order_weierstrass"), 2);
    assert_eq!(get("x035.jq.subgroup"), 48);
}
