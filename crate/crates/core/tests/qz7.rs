//! Point counts of 15a1 and 15a3 against naive enumeration of `(x, y)`
//! pairs, and the 2-torsion that separates `Z/2 + Z/4` from `Z/8`.

use num_rational::BigRational;
use num_traits::Zero;

use modcurve::algebra::ext::Fq;
use modcurve::algebra::field::{Field, FiniteField};
use modcurve::curve::elliptic::EllipticCurve;
use modcurve::data;
use modcurve::pipeline::qz7;
use modcurve::report::CheckSet;

fn naive_count(e: &EllipticCurve, f: &Fq) -> u64 {
    let q = f.order_u64().unwrap();
    let [a1, a2, a3, a4, a6] = e.a.map(|c| f.from_i64(c));
    let xs: Vec<_> = (0..q).map(|i| f.element(i)).collect();
    let mut n = 1;
    for x in &xs {
        let rhs = f.add(&f.mul(&f.add(&f.mul(&f.add(x, &a2), x), &a4), x), &a6);
        for y in &xs {
            let lhs = f.add(&f.mul(y, y), &f.mul(y, &f.add(&f.mul(&a1, x), &a3)));
            if lhs == rhs {
                n += 1;
            }
        }
    }
    n
}

#[test]
fn counts_match_enumeration() {
    for a in [data::CURVE_15A1, data::CURVE_15A3] {
        let e = EllipticCurve::new("t", a).unwrap();
        for (p, k) in [(7, 1), (11, 1), (13, 1), (17, 1), (11, 2), (11, 3)] {
            let f = Fq::canonical(p, k).unwrap();
            assert_eq!(e.count_points(&f).unwrap(), naive_count(&e, &f), "p = {p}, k = {k}");
        }
    }
}

#[test]
fn torsion_is_not_cyclic() {
    for a in [data::CURVE_15A1, data::CURVE_15A3] {
        let e = EllipticCurve::new("t", a).unwrap();
        let t = e.torsion().unwrap();
        assert_eq!(t.points.len(), 7);
        assert!(t.points.iter().all(|p| e.on_curve(p)));
        let two_torsion = t
            .points
            .iter()
            .filter(|(x, y)| {
                let r = |c: i64| BigRational::from_integer(c.into());
                (r(2) * y + r(a[0]) * x + r(a[2])).is_zero()
            })
            .count();
        assert_eq!(two_torsion, 3);
    }
}

#[test]
fn bound_over_the_cubic_field() {
    let mut c = CheckSet::new();
    assert!(qz7::run(&mut c).unwrap());
    let e = EllipticCurve::new("15a1", data::CURVE_15A1).unwrap();
    let b = qz7::torsion_bound_over_k(&e).unwrap();
    assert_eq!(b.bound, 8);
    assert_eq!(b.counts.iter().map(|c| c.0).collect::<Vec<_>>(), [11, 17, 19, 23, 31, 37, 47]);
}
