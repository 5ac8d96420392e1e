//! Cubic points on `X_0(35)`: the hyperelliptic model `y^2 = f(x)` of genus 3.
//!
//! The 48 rational divisors `D'(a, b) = a inf- + (3 - a - 3b) inf+ + 3b (0, -1)`
//! represent every class of degree 3. Each with `l(D') = 1` has a unique
//! effective representative `E = D' + div(g)`, and the irreducible ones are
//! cubic points. A degree-3 point is generated by `x` alone: `y` lies in
//! `Q(x_0)` because the field degrees 2 and 3 are coprime, so its field is
//! totally real exactly when the `x`-minimal polynomial has 3 real roots.

use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::field::Field;
use crate::algebra::poly::{self, Poly};
use crate::algebra::prime::PrimeField;
use crate::algebra::qpoly;
use crate::algebra::rational::{rat, Rationals};
use crate::algebra::sturm;
use crate::curve::zeta::LPolynomial;
use crate::error::{Error, Result};
use crate::report::{CheckSet, Source};
use crate::rr::class_group::order_from_multiples;
use crate::rr::hyperelliptic::{HypDivisor, HypFunction, HypPlace, Hyperelliptic};

type QCurve = Hyperelliptic<Rationals>;

/// Reduction prime for the consistency check on `J(Q)`.
pub const CHECK_PRIME: u64 = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub a: i64,
    pub b: i64,
    pub dim: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// One place of degree 3.
    Irreducible,
    /// Anything with a point at infinity, a rational point or a quadratic point.
    Reducible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CubicRecord {
    pub a: i64,
    pub b: i64,
    /// Monic `x`-polynomial of the affine part of `E`, as rational strings.
    pub m: Vec<String>,
    /// `y = r(x)` modulo `m` when `E` is irreducible.
    pub r: Option<Vec<String>>,
    pub inf_plus: i64,
    pub inf_minus: i64,
    pub shape: Shape,
    pub real_roots: Option<usize>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct X035Summary {
    pub classes: usize,
    pub dim_one: usize,
    pub irreducible: usize,
    pub totally_real: usize,
}

pub fn representative(a: i64, b: i64, p0: &HypPlace<Rationals>) -> HypDivisor<Rationals> {
    HypDivisor::from_terms(&[
        (HypPlace::InfMinus, a),
        (HypPlace::InfPlus, 3 - a - 3 * b),
        (p0.clone(), 3 * b),
    ])
}

fn q_curve(f: &[i64]) -> Result<QCurve> {
    Hyperelliptic::new(Rationals, f.iter().map(|c| rat(*c)).collect())
}

fn base_point_q(c: &QCurve) -> Result<HypPlace<Rationals>> {
    c.point(vec![rat(0), rat(1)], vec![rat(-1)])
}

fn qstrings(a: &[BigRational]) -> Vec<String> {
    a.iter().map(|c| c.to_string()).collect()
}

/// Orders of the two generators of `J(Q)` after reduction, and injectivity of
/// the 48-element subgroup they generate.
pub fn check_jq_mod_p(f: &[i64], checks: &mut CheckSet) -> Result<bool> {
    let k = PrimeField::new(CHECK_PRIME)?;
    let fp: Vec<u64> = f.iter().map(|c| k.from_i64(*c)).collect();
    let c = Hyperelliptic::new(k, fp)?;
    let l = LPolynomial::from_counts(CHECK_PRIME, 3, &c.point_counts(3))?;
    let jorder = u64::try_from(l.at_one()).map_err(|_| Error::Inconsistent("class number too large".into()))?;
    checks.record("x035.jfp.order", "class number of the reduction mod 3", "multiple of 48", Source::Elementary, jorder, jorder % 48 == 0);
    let p0 = c.point(vec![0, 1], vec![k.from_i64(-1)])?;
    let g1 = HypDivisor::from_terms(&[(HypPlace::InfMinus, 1), (HypPlace::InfPlus, -1)]);
    let g2 = HypDivisor::from_terms(&[(p0, 3), (HypPlace::InfPlus, -3)]);
    let principal = |d: &HypDivisor<PrimeField>| -> Result<bool> { Ok(c.is_principal(d)?.0) };
    let o1 = order_from_multiples(jorder, |n| principal(&g1.scale(n as i64)))?;
    let o2 = order_from_multiples(jorder, |n| principal(&g2.scale(n as i64)))?;
    let ok1 = checks.expect_eq("x035.jq.order_inf", "order of [inf- - inf+] mod 3", 24, Source::Published, o1);
    let ok2 = checks.expect_eq("x035.jq.order_weierstrass", "order of [3(0,-1) - 3 inf+] mod 3", 2, Source::Published, o2);
    if !(ok1 && ok2) {
        return Ok(false);
    }
    let combos: Vec<(i64, i64)> = (0..24).flat_map(|a| (0..2).map(move |b| (a, b))).filter(|&(a, b)| (a, b) != (0, 0)).collect();
    let principal_combos: Vec<(i64, i64)> = combos
        .par_iter()
        .map(|&(a, b)| Ok(((a, b), principal(&g1.scale(a).add(&g2.scale(b)))?)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, p)| *p)
        .map(|(ab, _)| ab)
        .collect();
    let subgroup = if principal_combos.is_empty() { 48 } else { 48 / (principal_combos.len() + 1) };
    let ok3 = checks.record(
        "x035.jq.subgroup",
        "the 47 nonzero combinations a[inf- - inf+] + b[3(0,-1) - 3 inf+] are non-principal mod 3",
        48,
        Source::Published,
        subgroup,
        principal_combos.is_empty(),
    );
    checks.trust("J_0(35)(Q) has rank 0 and equals Z/24 + Z/2 on the two displayed generators");
    checks.trust("reduction mod 3 is injective on rational torsion");
    Ok(ok3)
}

/// `l(D'(a, b))` for all 48 representatives, in parallel.
pub fn census(c: &QCurve) -> Result<Vec<(CensusEntry, Option<HypFunction<Rationals>>)>> {
    let p0 = base_point_q(c)?;
    let pairs: Vec<(i64, i64)> = (0..2).flat_map(|b| (0..24).map(move |a| (a, b))).collect();
    pairs
        .par_iter()
        .map(|&(a, b)| {
            let s = c.space(&representative(a, b, &p0))?;
            let g = if s.dim() == 1 { s.basis.first().cloned() } else { None };
            Ok((CensusEntry { a, b, dim: s.dim() }, g))
        })
        .collect()
}

/// `E = D' + div(g)` for the generator `g` of a one-dimensional `L(D')`.
pub fn extract(c: &QCurve, a: i64, b: i64, g: &HypFunction<Rationals>) -> Result<CubicRecord> {
    let q = Rationals;
    let p0 = base_point_q(c)?;
    let d = representative(a, b, &p0);
    // affine part: x-polynomial of the zeros of p + q y, minus the forced zeros at (0, 1)
    let norm = c.norm(&g.p, &g.q);
    let den_deg = poly::deg_i(&g.den);
    let xpow = poly::pow(&q, &poly::x(&q), den_deg as u32);
    let (m, rem) = poly::divrem(&q, &norm, &xpow);
    if !rem.is_empty() {
        return Err(Error::Inconsistent(format!("D'({a},{b}): numerator does not vanish at (0, 1)")));
    }
    let m = poly::monic(&q, &m);
    let ord = |p: &HypPlace<Rationals>| c.ord_numerator(p, &g.p, &g.q).ok_or_else(|| Error::Inconsistent("zero function".into()));
    let inf_plus = d.coeff(&HypPlace::InfPlus) + ord(&HypPlace::InfPlus)? + den_deg;
    let inf_minus = d.coeff(&HypPlace::InfMinus) + ord(&HypPlace::InfMinus)? + den_deg;
    let total = poly::deg_i(&m) + inf_plus + inf_minus;
    if total != 3 || inf_plus < 0 || inf_minus < 0 {
        return Err(Error::Inconsistent(format!("D'({a},{b}): representative has degree {total}")));
    }
    let mut record = CubicRecord {
        a,
        b,
        m: qstrings(&m),
        r: None,
        inf_plus,
        inf_minus,
        shape: Shape::Reducible,
        real_roots: None,
    };
    // support on a rational or quadratic point (or at infinity) is reducible
    let e_div = if inf_plus == 0 && inf_minus == 0 && qpoly::is_irreducible_small(&m) == Some(true) && m.len() == 4 {
        let qinv = poly::inv_mod(&q, &g.q, &m).ok_or_else(|| Error::Inconsistent("q vanishes on the cubic point".into()))?;
        let r = poly::rem(&q, &poly::neg(&q, &poly::mul(&q, &g.p, &qinv)), &m);
        let place = c.point(m.clone(), r.clone())?;
        record.shape = Shape::Irreducible;
        record.r = Some(qstrings(&r));
        record.real_roots = Some(sturm::sturm_real_roots(&m)?);
        HypDivisor::from_terms(&[(place, 1)])
    } else {
        reducible_support(c, &m, inf_plus, inf_minus, g, &d)?
    };
    // E ~ D' by an independent principality test
    let (ok, _) = c.is_principal(&e_div.sub(&d))?;
    if !ok || e_div.degree() != 3 || !e_div.is_effective() {
        return Err(Error::Inconsistent(format!("D'({a},{b}): extracted divisor is not equivalent to D'")));
    }
    Ok(record)
}

/// Places of a reducible `E`, resolved through the factors of `m`.
fn reducible_support(
    c: &QCurve,
    m: &Poly<Rationals>,
    inf_plus: i64,
    inf_minus: i64,
    g: &HypFunction<Rationals>,
    d: &HypDivisor<Rationals>,
) -> Result<HypDivisor<Rationals>> {
    let q = Rationals;
    let mut candidates: Vec<HypPlace<Rationals>> = Vec::new();
    let factors = qpoly::factor_small(m).ok_or_else(|| Error::Inconsistent("cannot factor the x-polynomial".into()))?;
    for (fac, _) in &factors {
        if fac.len() == 2 {
            let x0 = -fac[0].clone();
            let fx = poly::eval(&q, &c.f, &x0);
            if fx.is_zero() {
                candidates.push(HypPlace::Point { m: fac.clone(), r: Vec::new() });
            } else if let Some(y0) = qpoly::rational_sqrt(&fx) {
                candidates.push(c.point(fac.clone(), vec![y0])?);
            } else {
                candidates.push(HypPlace::Conjugate { m: fac.clone() });
            }
        } else {
            // a degree-2 factor of a degree-3 divisor carries one quadratic point
            let qinv = poly::inv_mod(&q, &g.q, fac).ok_or_else(|| Error::Inconsistent("degenerate quadratic support".into()))?;
            let r = poly::rem(&q, &poly::neg(&q, &poly::mul(&q, &g.p, &qinv)), fac);
            candidates.push(c.point(fac.clone(), r)?);
        }
    }
    for (p, _) in &d.terms {
        candidates.push(p.clone());
    }
    let div = c.divisor_on(g, &candidates)?;
    let e = d.add(&div);
    if e.coeff(&HypPlace::InfPlus) != inf_plus || e.coeff(&HypPlace::InfMinus) != inf_minus {
        return Err(Error::Inconsistent("multiplicities at infinity disagree".into()));
    }
    Ok(e)
}

/// Full pipeline; every step is recorded in `checks`.
pub fn run(f: &[i64], checks: &mut CheckSet) -> Result<(X035Summary, Vec<CensusEntry>, Vec<CubicRecord>)> {
    let mut summary = X035Summary::default();
    let c = q_curve(f)?;
    let jq = checks.timed("x035.jq", |ch| check_jq_mod_p(f, ch));
    match jq {
        Ok(true) => {}
        Ok(false) => {
            checks.record("x035.verdict", "no totally real cubic point on X_0(35)", "PASS", Source::Published, "FAIL at x035.jq", false);
            return Ok((summary, Vec::new(), Vec::new()));
        }
        Err(e) => {
            checks.error("x035.jq", "J(Q) consistency mod 3", "orders 24 and 2", Source::Published, &e);
            return Err(e);
        }
    }
    let census = checks.timed("x035.census", |_| census(&c))?;
    summary.classes = census.len();
    let dims: Vec<usize> = census.iter().map(|(e, _)| e.dim).collect();
    let window = dims.iter().all(|d| (1..=2).contains(d));
    checks.record("x035.census.window", "every l(D') lies in {1, 2}", "1 or 2", Source::Published, &dims, window);
    summary.dim_one = dims.iter().filter(|d| **d == 1).count();
    checks.expect_eq("x035.census.classes", "degree-3 classes enumerated", 48, Source::Published, summary.classes);
    let ok_dims = checks.expect_eq("x035.census.dim_one", "divisors with l(D') = 1", 44, Source::Published, summary.dim_one);
    if !window {
        checks.record("x035.verdict", "no totally real cubic point on X_0(35)", "PASS", Source::Published, "FAIL at x035.census.window", false);
        return Ok((summary, census.into_iter().map(|(e, _)| e).collect(), Vec::new()));
    }
    let records: Vec<CubicRecord> = checks.timed("x035.classify", |_| {
        census
            .par_iter()
            .filter_map(|(e, g)| g.as_ref().map(|g| extract(&c, e.a, e.b, g)))
            .collect::<Result<Vec<_>>>()
    })?;
    summary.irreducible = records.iter().filter(|r| r.shape == Shape::Irreducible).count();
    summary.totally_real = records.iter().filter(|r| r.real_roots == Some(3)).count();
    let ok_irr = checks.expect_eq("x035.cubic.irreducible", "irreducible effective representatives", 28, Source::Published, summary.irreducible);
    let ok_tr = checks.expect_eq("x035.cubic.totally_real", "irreducible representatives with a totally real field", 0, Source::Published, summary.totally_real);
    let verdict = ok_dims && ok_irr && ok_tr;
    checks.record(
        "x035.verdict",
        "no totally real cubic point on X_0(35)",
        [48, 44, 28, 0],
        Source::Published,
        [summary.classes, summary.dim_one, summary.irreducible, summary.totally_real],
        verdict,
    );
    Ok((summary, census.into_iter().map(|(e, _)| e).collect(), records))
}
