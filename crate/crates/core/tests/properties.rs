mod common;

use std::sync::OnceLock;

use modcurve::algebra::ext::Fq;
use modcurve::algebra::prime::PrimeField;
use proptest::prelude::*;

use common::*;

fn plane() -> &'static PlaneFixture {
    static F: OnceLock<PlaneFixture> = OnceLock::new();
    F.get_or_init(PlaneFixture::new)
}

fn hyp() -> &'static HypFixture {
    static F: OnceLock<HypFixture> = OnceLock::new();
    F.get_or_init(|| HypFixture::new(3))
}

fn terms() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -2i64..=3), 1..=3)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, ..ProptestConfig::default() })]

    #[test]
    fn riemann_roch_plane(t in terms()) {
        plane_riemann_roch(plane(), &t).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn riemann_roch_hyperelliptic(t in terms()) {
        hyp_riemann_roch(hyp(), &t).map_err(TestCaseError::fail)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn bezout_totals(deg in 1u32..=3, digits in prop::collection::vec(0u64..3, 10)) {
        bezout(plane(), deg, &digits).map_err(TestCaseError::fail)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 30, ..ProptestConfig::default() })]

    #[test]
    fn plane_witnesses(deg in 1u32..=2, a in prop::collection::vec(0u64..3, 6), b in prop::collection::vec(0u64..3, 6)) {
        plane_witness(plane(), deg, &a, &b).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn hyperelliptic_witnesses(t in prop::collection::vec((0usize..1000, -2i64..=2), 1..=3)) {
        hyp_witness(hyp(), &t).map_err(TestCaseError::fail)?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn prime_field_axioms(p in prop::sample::select(vec![2u64, 3, 5, 7, 17, 101]), i: u64, j: u64, l: u64) {
        field_axioms(&PrimeField::new(p).unwrap(), i, j, l).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn extension_field_axioms(pk in prop::sample::select(vec![(2u64, 3usize), (3, 2), (3, 3), (3, 4), (5, 2), (7, 2), (17, 2)]), i: u64, j: u64, l: u64) {
        field_axioms(&Fq::canonical(pk.0, pk.1).unwrap(), i, j, l).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn root_counts_small_fields(
        pk in prop::sample::select(vec![(2u64, 1usize), (2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 1), (3, 2), (3, 3), (3, 4), (5, 1), (5, 2), (7, 1), (7, 2)]),
        coeffs in prop::collection::vec(0u64..7, 1..=7),
    ) {
        root_count(pk.0, pk.1, &coeffs).map_err(TestCaseError::fail)?;
    }
}
