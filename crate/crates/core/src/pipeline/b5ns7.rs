//! Cubic points on the genus-6 plane sextic `D` with involution
//! `w5 : (u:v:w) -> (-u:-v:w)`.
//!
//! Model and cusp checks run over `Q` and `Q(eta)`; everything else runs on
//! reductions mod 3 and mod 17. The sieve over `X^(3)(F_3)` and the rank of
//! the formal-immersion matrix over `F_27` are the core of the argument.

use std::path::PathBuf;

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::bivariate;
use crate::algebra::eta;
use crate::algebra::ext::{Fq, NumberField};
use crate::algebra::field::{Field, FiniteField};
use crate::algebra::linalg;
use crate::algebra::poly::{self, Poly};
use crate::algebra::prime::PrimeField;
use crate::algebra::qpoly;
use crate::algebra::rational::{ratio, Rationals};
use crate::curve::cache::CountCache;
use crate::curve::count::Counter;
use crate::curve::form::monomials;
use crate::curve::model::counts_from_places;
use crate::curve::place;
use crate::curve::zeta::LPolynomial;
use crate::curve::{Chart, Divisor, Form, PlaceKey, PlaneModel};
use crate::data;
use crate::error::{Error, Result};
use crate::report::{CheckSet, Source, Verdict};
use crate::rr::class_group::{class_group_structure, Class, ClassGroupData, PlaneClassGroup};
use crate::rr::plane::PlaneRR;

pub const GENUS: i64 = 6;
/// `#J(F_3)`.
pub const ORDER_F3: u64 = 1127;
/// `#J(F_17) = 2^3 7^3 31 271`.
pub const ORDER_F17: u64 = 23_052_344;
pub const SIEVE_K: std::ops::RangeInclusive<i64> = -3..=3;
/// Seed for the random basis changes in the rank test.
pub const RANK_SEED: u64 = 0x0062_356e_7337;

/// Curve and cusp data; the published values by default.
#[derive(Clone, Debug)]
pub struct Input {
    pub terms: Vec<([u32; 3], i64)>,
    pub cusp_zero: [Vec<i64>; 3],
    pub cusp_infinity: [Vec<i64>; 3],
}

impl Default for Input {
    fn default() -> Self {
        Input {
            terms: data::SEXTIC_TERMS.to_vec(),
            cusp_zero: data::cusp_zero(),
            cusp_infinity: data::cusp_infinity(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub skip_lpoly17: bool,
    pub cache_dir: Option<PathBuf>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ZetaData {
    pub q: u64,
    pub counts: Vec<u64>,
    pub lpoly: Vec<i64>,
    pub order: String,
    #[serde(skip)]
    pub from_cache: usize,
}

/// Values worth keeping between runs (regression fixtures).
#[derive(Clone, Debug, Default, Serialize)]
pub struct B5ns7Summary {
    pub zeta: Vec<ZetaData>,
    pub invariant_factors: Vec<u64>,
    pub sym_cube: usize,
    pub hits: Vec<(String, i64)>,
    pub immersion_rank: Option<usize>,
}

// ---------------------------------------------------------------------------
// Model over Q

fn quadratic(d: i64) -> NumberField {
    NumberField::new_unchecked(Rationals, vec![ratio(-d, 1), ratio(0, 1), ratio(1, 1)])
}

/// Coordinate `(a + b sqrt(d)) / den` in `Q(sqrt(d))`.
fn quad_coord(k: &NumberField, c: [i64; 3]) -> Vec<BigRational> {
    k.from_poly(&[ratio(c[0], c[2]), ratio(c[1], c[2])])
}

fn proportional<F: Field>(f: &F, a: &[F::Elem; 3], b: &[F::Elem; 3]) -> bool {
    let nonzero = a.iter().any(|x| !f.is_zero(x)) && b.iter().any(|x| !f.is_zero(x));
    nonzero
        && (0..3).all(|i| {
            let j = (i + 1) % 3;
            f.is_zero(&f.sub(&f.mul(&a[i], &b[j]), &f.mul(&a[j], &b[i])))
        })
}

/// Number of geometric singular points with `w != 0`.
fn affine_singular_count(form: &Form<Rationals>) -> Result<usize> {
    let q = Rationals;
    let f = form.dehomogenize(&q, Chart::W);
    let fx = bivariate::d_u(&q, &f);
    let fy = bivariate::d_v(&q, &f);
    let r = poly::gcd(&q, &bivariate::resultant_v(&q, &f, &fy), &bivariate::resultant_v(&q, &f, &fx));
    if r.is_empty() {
        return Err(Error::Inconsistent("singular locus is not finite".into()));
    }
    if r.len() == 1 {
        return Ok(0);
    }
    let sqfree = poly::div_exact(&q, &r, &poly::gcd(&q, &r, &poly::derivative(&q, &r)));
    let factors = qpoly::factor_small(&sqfree)
        .ok_or_else(|| Error::Inconsistent("x-coordinates of the singular points have degree > 3".into()))?;
    let mut count = 0;
    for (phi, _) in factors {
        let k = NumberField::new_unchecked(q, phi.clone());
        let x0 = k.generator();
        let mut g: Poly<NumberField> = Vec::new();
        for a in [&f, &fx, &fy] {
            let h = bivariate::eval_u::<Rationals, NumberField>(&k, a, |c| k.from_base(c), &x0);
            g = poly::gcd(&k, &g, &h);
        }
        if g.len() > 1 {
            let sq = poly::div_exact(&k, &g, &poly::gcd(&k, &g, &poly::derivative(&k, &g)));
            count += (phi.len() - 1) * (sq.len() - 1);
        }
    }
    Ok(count)
}

/// Number of geometric singular points on the line `w = 0`.
fn infinity_singular_count(form: &Form<Rationals>) -> usize {
    let q = Rationals;
    let partials: Vec<Form<Rationals>> = (0..3).map(|i| form.partial(&q, i)).collect();
    let mut g = form.at_infinity_v(&q);
    for d in &partials {
        g = poly::gcd(&q, &g, &d.at_infinity_v(&q));
    }
    let mut n = if g.len() > 1 {
        let sq = poly::div_exact(&q, &g, &poly::gcd(&q, &g, &poly::derivative(&q, &g)));
        sq.len() - 1
    } else {
        0
    };
    let e = [ratio(1, 1), ratio(0, 1), ratio(0, 1)];
    if q.is_zero(&form.eval(&q, &e)) && partials.iter().all(|d| q.is_zero(&d.eval(&q, &e))) {
        n += 1;
    }
    n
}

/// Singular with a tangent cone of two distinct lines, in the chart `w = 1`.
fn is_ordinary_node(form: &Form<Rationals>, k: &NumberField, pt: &[Vec<BigRational>; 3]) -> bool {
    let q = Rationals;
    let at = |g: &Form<Rationals>| g.eval_in(k, |c| k.from_base(c), pt);
    if !k.is_zero(&at(form)) || (0..3).any(|i| !k.is_zero(&at(&form.partial(&q, i)))) {
        return false;
    }
    let second = |i: usize, j: usize| at(&form.partial(&q, i).partial(&q, j));
    let (fuu, fuv, fvv) = (second(0, 0), second(0, 1), second(1, 1));
    !k.is_zero(&k.sub(&k.mul(&fuv, &fuv), &k.mul(&fuu, &fvv)))
}

struct StatedNode {
    d: i64,
    field: NumberField,
    pt: [Vec<BigRational>; 3],
}

fn stated_nodes() -> Vec<StatedNode> {
    data::SEXTIC_NODES
        .iter()
        .map(|(d, c)| {
            let field = quadratic(*d);
            let pt = [quad_coord(&field, c[0]), quad_coord(&field, c[1]), quad_coord(&field, c[2])];
            StatedNode { d: *d, field, pt }
        })
        .collect()
}

/// Distinct as geometric points; points over different quadratic fields
/// coincide only if both are rational.
fn distinct(a: &StatedNode, b: &StatedNode) -> bool {
    if a.d == b.d {
        return !proportional(&a.field, &a.pt, &b.pt);
    }
    let rational = |n: &StatedNode| -> Option<[BigRational; 3]> {
        let c: Vec<BigRational> = n.pt.iter().map(|x| n.field.as_base(x)).collect::<Option<_>>()?;
        Some([c[0].clone(), c[1].clone(), c[2].clone()])
    };
    match (rational(a), rational(b)) {
        (Some(x), Some(y)) => !proportional(&Rationals, &x, &y),
        _ => true,
    }
}

/// Dimension of the cubics through the stated nodes, over `Q`.
fn adjoint_cubic_dim(nodes: &[StatedNode]) -> usize {
    let mons = monomials(3);
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for n in nodes {
        let k = &n.field;
        let vals: Vec<Vec<BigRational>> = mons
            .iter()
            .map(|e| (0..3).fold(k.one(), |acc, i| k.mul(&acc, &k.pow(&n.pt[i], e[i] as u64))))
            .collect();
        for s in 0..k.ext_degree() {
            rows.push(vals.iter().map(|v| v.get(s).cloned().unwrap_or_else(|| ratio(0, 1))).collect());
        }
    }
    Rationals.kernel(rows, mons.len()).len()
}

/// Four ordinary nodes at the stated points, six adjoint cubics and `w5`
/// invariance. Returns whether all hold.
pub fn verify_model(input: &Input, checks: &mut CheckSet) -> Result<bool> {
    let q = Rationals;
    let form = data::form_mod(&q, &input.terms);
    let affine = affine_singular_count(&form)?;
    let infinite = infinity_singular_count(&form);
    let total = affine + infinite;
    let ok_count = checks.expect_eq(
        "b5ns7.model.singular_points",
        "geometric singular points of the sextic",
        4,
        Source::Published,
        total,
    );

    let nodes = stated_nodes();
    let nodal: Vec<bool> = nodes.iter().map(|n| is_ordinary_node(&form, &n.field, &n.pt)).collect();
    let pairwise = (0..nodes.len()).all(|i| (i + 1..nodes.len()).all(|j| distinct(&nodes[i], &nodes[j])));
    let ok_nodes = checks.record(
        "b5ns7.model.nodes",
        "the stated points (+-i:0:1), (0:+-1/sqrt5:1) are distinct ordinary nodes",
        [true, true, true, true],
        Source::Published,
        &nodal,
        pairwise && nodal.iter().all(|b| *b),
    );

    let dim = adjoint_cubic_dim(&nodes);
    let ok_adj = checks.expect_eq(
        "b5ns7.model.adjoint_cubics",
        "cubics through the four nodes (= genus)",
        GENUS as usize,
        Source::Published,
        dim,
    );

    let inv = form.sign_twist(&q, data::W5_SIGNS) == form;
    let ok_w5 = checks.expect_eq("b5ns7.model.w5", "F(-u, -v, w) = F(u, v, w)", true, Source::Published, inv);
    Ok(ok_count && ok_nodes && ok_adj && ok_w5)
}

// ---------------------------------------------------------------------------
// Cusps

/// The cusps reduced mod 3, with the field `F_27 = F_3(eta)`.
#[derive(Clone, Debug)]
pub struct ReducedCusps {
    pub f27: Fq,
    pub zero: PlaceKey,
    pub infinity: PlaceKey,
    /// Projective coordinates of `c_inf` over `F_27`.
    pub infinity_point: [Vec<u64>; 3],
}

fn eta_point(k: &NumberField, c: &[Vec<i64>; 3]) -> [Vec<BigRational>; 3] {
    let conv = |v: &Vec<i64>| k.from_poly(&eta::as_rationals(v));
    [conv(&c[0]), conv(&c[1]), conv(&c[2])]
}

fn reduce_point(f27: &Fq, c: &[Vec<i64>; 3]) -> [Vec<u64>; 3] {
    let fp = f27.prime_field();
    let g = f27.generator();
    let conv = |v: &Vec<i64>| {
        let red: Vec<u64> = v.iter().map(|x| fp.reduce_i64(*x)).collect();
        place::eval_fp_poly(f27, &red, &g)
    };
    [conv(&c[0]), conv(&c[1]), conv(&c[2])]
}

/// Cusp coordinates satisfy `F = 0` in `Q(eta)`, are swapped by `w5`, and
/// reduce to two distinct places of degree 3 mod 3. `None` if a check failed.
pub fn verify_cusps(input: &Input, model3: &PlaneModel, checks: &mut CheckSet) -> Result<Option<ReducedCusps>> {
    let q = Rationals;
    let cert = eta::minpoly_eta();
    let ok_min = match &cert {
        Ok(c) => checks.expect_eq(
            "b5ns7.cusps.minpoly",
            "minimal polynomial of eta",
            "t^3 - 7t^2 + 7t + 7".to_string(),
            Source::Published,
            poly_string(&c.minpoly),
        ),
        Err(e) => {
            checks.error("b5ns7.cusps.minpoly", "minimal polynomial of eta", "t^3 - 7t^2 + 7t + 7", Source::Published, e);
            false
        }
    };
    let inert = cert.as_ref().map(|c| c.irreducible_mod_3).unwrap_or(false);
    let ok_inert = checks.expect_eq(
        "b5ns7.cusps.inert_3",
        "the minimal polynomial of eta is irreducible mod 3",
        true,
        Source::Published,
        inert,
    );

    let k = NumberField::new_unchecked(q, eta::as_rationals(&eta::eta_minpoly_coeffs()));
    // G_2(t, 1) = m(t)^7 vanishes at eta; F_2(t, 1) = t does not
    let e = k.generator();
    let m_at_eta = eta::eta_minpoly_coeffs().iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, &e), &k.from_i64(*c)));
    let g2_zero = k.is_zero(&k.pow(&m_at_eta, 7));
    let f2_zero = k.is_zero(&e);
    checks.record(
        "b5ns7.cusps.condition",
        "the cusps lie over G_2(eta : 1) = 0; F_2(eta : 1) = eta is nonzero, so the condition is read with G_2",
        serde_json::json!({ "G_2(eta:1) = 0": true, "F_2(eta:1) = 0": false }),
        Source::Elementary,
        serde_json::json!({ "G_2(eta:1) = 0": g2_zero, "F_2(eta:1) = 0": f2_zero }),
        g2_zero && !f2_zero,
    );
    let form = data::form_mod(&q, &input.terms);
    let c0 = eta_point(&k, &input.cusp_zero);
    let ci = eta_point(&k, &input.cusp_infinity);
    let on = |pt: &[Vec<BigRational>; 3]| k.is_zero(&form.eval_in(&k, |c| k.from_base(c), pt));
    let ok_on = checks.record(
        "b5ns7.cusps.on_curve",
        "F(c0) = F(c_inf) = 0 in Q(eta)",
        [true, true],
        Source::Published,
        [on(&c0), on(&ci)],
        on(&c0) && on(&ci),
    );
    let flip = |pt: &[Vec<BigRational>; 3]| [k.neg(&pt[0]), k.neg(&pt[1]), pt[2].clone()];
    let swap = proportional(&k, &flip(&c0), &ci) && proportional(&k, &flip(&ci), &c0);
    let ok_swap = checks.expect_eq("b5ns7.cusps.w5_swap", "w5 interchanges c0 and c_inf", true, Source::Published, swap);
    if !(ok_min && ok_inert && ok_on && ok_swap) {
        return Ok(None);
    }

    let f27 = Fq::new(3, &eta::minpoly_mod_p(model3.prime_field()))?;
    let p0 = reduce_point(&f27, &input.cusp_zero);
    let pi = reduce_point(&f27, &input.cusp_infinity);
    let reduced = model3.place_of_point(&f27, &p0).and_then(|a| Ok((a, model3.place_of_point(&f27, &pi)?)));
    let (z, i) = match reduced {
        Ok(x) => x,
        Err(e) => {
            checks.error("b5ns7.cusps.reduction", "reductions mod 3 are distinct places of degree 3", "two places", Source::Published, &e);
            return Ok(None);
        }
    };
    let image = model3.sign_image(&z, data::W5_SIGNS)?;
    let ok = z.degree() == 3 && i.degree() == 3 && z != i && image == i;
    let ok_red = checks.record(
        "b5ns7.cusps.reduction",
        "reductions mod 3 are distinct places of degree 3, swapped by w5",
        [3, 3],
        Source::Published,
        [z.degree(), i.degree()],
        ok,
    );
    Ok(ok_red.then_some(ReducedCusps { f27, zero: z, infinity: i, infinity_point: pi }))
}

fn poly_string(p: &[BigRational]) -> String {
    let mut parts = Vec::new();
    for (i, c) in p.iter().enumerate().rev() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{i}"),
        };
        let abs = if c < &ratio(0, 1) { -c.clone() } else { c.clone() };
        let coef = if abs == ratio(1, 1) && i > 0 { String::new() } else { abs.to_string() };
        let sign = if c < &ratio(0, 1) { "-" } else { "+" };
        parts.push((sign, format!("{coef}{mono}")));
    }
    let mut out = String::new();
    for (n, (s, t)) in parts.iter().enumerate() {
        if n == 0 {
            if *s == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {s} "));
        }
        out.push_str(t);
    }
    out
}

// ---------------------------------------------------------------------------
// Zeta functions

pub fn model_mod(p: u64, input: &Input) -> Result<PlaneModel> {
    let fp = PrimeField::new(p)?;
    PlaneModel::new(fp, data::form_mod(&fp, &input.terms))
}

fn mobius(n: usize) -> i64 {
    let mut m = n;
    let mut out = 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            out = -out;
        }
        d += 1;
    }
    if m > 1 {
        out = -out;
    }
    out
}

/// Places of each degree from `N_1..N_n` by Mobius inversion; `None` if a
/// count is not a nonnegative integer.
pub fn places_from_counts(counts: &[u64]) -> Option<Vec<u64>> {
    let mut b = vec![0u64];
    for d in 1..=counts.len() {
        let s: i64 = (1..=d).filter(|e| d % e == 0).map(|e| mobius(d / e) * counts[e - 1] as i64).sum();
        if s < 0 || s % d as i64 != 0 {
            return None;
        }
        b.push((s / d as i64) as u64);
    }
    Some(b)
}

/// `N_1..N_6`, the L-polynomial and its checks at `q`. `None` if the model
/// has bad reduction or a check failed.
pub fn zeta(model: &PlaneModel, expected_order: u64, opts: &Options, checks: &mut CheckSet) -> Result<Option<ZetaData>> {
    let q = model.prime_field().p();
    let id = |s: &str| format!("b5ns7.zeta{q}.{s}");
    let good = model.node_count() == 4 && model.genus() == GENUS;
    if !checks.record(
        &id("reduction"),
        &format!("the reduction mod {q} has 4 ordinary nodes"),
        4,
        Source::Elementary,
        model.node_count(),
        good,
    ) {
        return Ok(None);
    }
    let cache = opts.cache_dir.as_ref().map(|d| CountCache::new(d, model));
    let counter = Counter::new(model)?;
    let (counts, from_cache) = counter.smooth_counts_cached(GENUS as usize, cache.as_ref())?;

    let max_enum = if q <= 3 { GENUS as usize } else { 2 };
    let direct = counts_from_places(&model.place_counts(max_enum));
    let inverted = places_from_counts(&counts);
    let regathered = inverted.as_ref().map(|b| counts_from_places(b));
    let agg_ok = direct[..] == counts[..max_enum] && regathered.as_deref() == Some(&counts[..]);
    checks.record(
        &id("places"),
        &format!("N_k = sum_(d|k) d B_d for k <= 6, with B_d enumerated for d <= {max_enum}"),
        &counts,
        Source::Elementary,
        serde_json::json!({ "enumerated": direct, "places": inverted }),
        agg_ok,
    );

    let l = match LPolynomial::from_counts(q, GENUS as usize, &counts) {
        Ok(l) => l,
        Err(e) => {
            checks.error(&id("lpoly"), "L-polynomial from N_1..N_6", "integral coefficients", Source::Elementary, &e);
            return Ok(None);
        }
    };
    let fe = l.functional_equation_holds();
    checks.expect_eq(&id("functional_equation"), "a_(12-i) = q^(6-i) a_i", true, Source::Elementary, fe);
    let weil = l.satisfies_weil();
    checks.expect_eq(&id("weil"), "all inverse roots have absolute value sqrt(q)", true, Source::Elementary, weil);
    let order = l.at_one();
    let ok_order = checks.expect_eq(
        &id("order"),
        &format!("#J(F_{q}) = L(1)"),
        expected_order.to_string(),
        Source::Published,
        order.to_string(),
    );
    let data = ZetaData { q, counts, lpoly: l.coeffs_i64(), order: order.to_string(), from_cache };
    Ok((agg_ok && fe && weil && ok_order).then_some(data))
}

// ---------------------------------------------------------------------------
// J(F_3)

/// Structure of `J(F_3)`, the order of `[c0 - c_inf]` and the relation
/// `(w5 - 1)[3c0 - 3c_inf] = [c0 - c_inf]` computed two ways.
pub fn jacobian_f3(
    group: &PlaneClassGroup<'_>,
    cusps: &ReducedCusps,
    checks: &mut CheckSet,
) -> Result<Option<ClassGroupData>> {
    let model = group.rr.model;
    let diff = &Divisor::place(cusps.zero.clone()) - &Divisor::place(cusps.infinity.clone());
    let a = group.class_of(&diff)?;
    let ord = group.order(&a, ORDER_F3)?;
    let ok_ord = checks.expect_eq("b5ns7.jac.cusp_order", "order of [c0 - c_inf] in J(F_3)", 7, Source::Published, ord);

    let samples: Vec<Class> = group.samples(2).iter().map(|d| group.class_of(d)).collect::<Result<_>>()?;
    let data = class_group_structure(group, ORDER_F3, &samples, Some(&a))?;
    let ok_struct = checks.record(
        "b5ns7.jac.structure",
        "invariant factors of J(F_3)",
        [7, 161],
        Source::Published,
        &data,
        data.conclusive && data.invariant_factors == [7, 161],
    );

    let d3 = diff.scale(3);
    let w = model.apply_signs(&d3, data::W5_SIGNS)?;
    let by_divisors = group.rr.is_principal(&(&(&w - &d3) - &diff))?.0;
    let x = group.class_of(&d3)?;
    let y = group.class_of(&w)?;
    let by_group = group.equal(&group.sub(&y, &x)?, &a)?;
    let ok_rel = checks.record(
        "b5ns7.jac.w5_relation",
        "(w5 - 1)[3c0 - 3c_inf] = [c0 - c_inf], by divisors and by class arithmetic",
        [true, true],
        Source::Published,
        [by_divisors, by_group],
        by_divisors && by_group,
    );
    Ok((ok_ord && ok_struct && ok_rel).then_some(data))
}

// ---------------------------------------------------------------------------
// Torsion

/// Multiplicity of `T = 1` as a root of `T^12 L(1/T)` mod `l`.
pub fn unit_root_multiplicity_mod(lpoly: &[i64], l: u64) -> Result<usize> {
    let fl = PrimeField::new(l)?;
    let rev: Vec<u64> = lpoly.iter().rev().map(|c| fl.reduce_i64(*c)).collect();
    let rev = poly::trimmed(&fl, rev);
    if rev.is_empty() {
        return Ok(usize::MAX);
    }
    Ok(poly::root_multiplicity(&fl, &rev, &1))
}

/// 7-part of the rational torsion from the two reductions.
pub fn torsion_refinement(jac: &ClassGroupData, z3: &ZetaData, z17: &ZetaData, checks: &mut CheckSet) -> Result<bool> {
    let a: u64 = z3.order.parse().map_err(|_| Error::Inconsistent("order is not an integer".into()))?;
    let b: u64 = z17.order.parse().map_err(|_| Error::Inconsistent("order is not an integer".into()))?;
    let g = crate::algebra::integer::gcd_u64(a, b);
    let ok_gcd = checks.expect_eq("b5ns7.torsion.gcd", "gcd(#J(F_3), #J(F_17))", 49, Source::Elementary, g);
    let seven = jac.sylow.iter().find(|s| s.prime == 7);
    let exp7 = seven.map(|s| s.factors.iter().copied().max().unwrap_or(0)).unwrap_or(0);
    let ok_exp = checks.expect_eq("b5ns7.torsion.exponent_f3", "exponent of the 7-part of J(F_3)", 7, Source::Published, exp7);
    let mult = unit_root_multiplicity_mod(&z17.lpoly, 7)?;
    let only7 = crate::algebra::integer::factor_u64(g).iter().all(|(p, _)| *p == 7);
    let conclusive = mult == 1;
    checks.push(
        "b5ns7.torsion.refinement",
        "multiplicity of (T - 1) in the reversed L-polynomial at 17, mod 7; 1 means J(F_17)[7] is cyclic and J(Q)_tors embeds in Z/7",
        1,
        Source::Regression,
        serde_json::json!({ "multiplicity": mult, "conclusion": if conclusive && only7 && ok_exp { "J(Q)_tors embeds in Z/7" } else { "refinement inconclusive" } }),
        if conclusive { Verdict::Pass } else { Verdict::Inconclusive },
    );
    Ok(ok_gcd && ok_exp && conclusive && only7)
}

// ---------------------------------------------------------------------------
// X^(3)(F_3) and the sieve

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymCubePoint {
    pub places: Vec<PlaceKey>,
    pub label: String,
}

impl SymCubePoint {
    pub fn divisor(&self) -> Divisor {
        self.places.iter().map(|k| (k.clone(), 1)).collect()
    }

    pub fn shape(&self) -> String {
        self.places.iter().map(|k| k.degree().to_string()).collect::<Vec<_>>().join("+")
    }
}

/// Effective divisors of degree 3 over `F_3`, cusps labelled.
pub fn enumerate_sym_cube(model: &PlaneModel, cusps: &ReducedCusps) -> Vec<SymCubePoint> {
    let places = model.places_up_to(3);
    let by_deg = |d: usize| places.iter().filter(|k| k.degree() == d).cloned().collect::<Vec<_>>();
    let (one, two, three) = (by_deg(1), by_deg(2), by_deg(3));
    let mut out = Vec::new();
    for i in 0..one.len() {
        for j in i..one.len() {
            for k in j..one.len() {
                out.push(vec![one[i].clone(), one[j].clone(), one[k].clone()]);
            }
        }
    }
    for a in &one {
        for b in &two {
            out.push(vec![a.clone(), b.clone()]);
        }
    }
    for c in &three {
        out.push(vec![c.clone()]);
    }
    out.into_iter()
        .enumerate()
        .map(|(n, places)| {
            let label = if places == [cusps.zero.clone()] {
                "c0".to_string()
            } else if places == [cusps.infinity.clone()] {
                "c_inf".to_string()
            } else {
                format!("y{n}")
            };
            SymCubePoint { places, label }
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SieveHit {
    pub y: String,
    pub k: i64,
    /// Degrees of the witness `G / H0`.
    pub witness_degree: u32,
}

/// Principality of `y - w5(y) - k (c0 - c_inf)` for every `y` and `k`.
pub fn run_sieve(rr: &PlaneRR<'_>, points: &[SymCubePoint], cusps: &ReducedCusps) -> Result<(usize, Vec<SieveHit>)> {
    let model = rr.model;
    let diff = &Divisor::place(cusps.zero.clone()) - &Divisor::place(cusps.infinity.clone());
    let pairs: Vec<(usize, i64)> = (0..points.len()).flat_map(|i| SIEVE_K.map(move |k| (i, k))).collect();
    let results: Vec<Option<SieveHit>> = pairs
        .par_iter()
        .map(|&(i, k)| -> Result<Option<SieveHit>> {
            let y = points[i].divisor();
            let wy = model.apply_signs(&y, data::W5_SIGNS)?;
            let d = &(&y - &wy) - &diff.scale(k);
            let (yes, witness) = rr.is_principal(&d)?;
            Ok(yes.then(|| SieveHit {
                y: points[i].label.clone(),
                k,
                witness_degree: witness.map_or(0, |(g, _)| g.degree),
            }))
        })
        .collect::<Result<_>>()?;
    Ok((pairs.len(), results.into_iter().flatten().collect()))
}

// ---------------------------------------------------------------------------
// Formal immersion

fn form_vector(f: &PrimeField, g: &Form<PrimeField>, mons: &[[u32; 3]]) -> Vec<u64> {
    mons.iter().map(|e| g.terms.get(e).copied().unwrap_or_else(|| f.zero())).collect()
}

/// Coordinates of `t` in the span of the independent vectors `basis`.
fn span_coords<F: Field>(f: &F, basis: &[Vec<F::Elem>], t: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = basis.len();
    let mut rows: linalg::Matrix<F> = (0..t.len())
        .map(|r| {
            let mut row: Vec<F::Elem> = basis.iter().map(|b| b[r].clone()).collect();
            row.push(t[r].clone());
            row
        })
        .collect();
    let pivots = linalg::rref(f, &mut rows, n + 1);
    if pivots != (0..n).collect::<Vec<_>>() {
        return None;
    }
    Some(rows.iter().take(n).map(|r| r[n].clone()).collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct FormalImmersionCertificate {
    /// `+1` and `-1` eigenspace dimensions of `w5*` on adjoint cubics.
    pub plus_dim: usize,
    pub minus_dim: usize,
    /// Basis of the `-1` eigenspace, as coefficient vectors on the cubic monomials `u^3, u^2 v, ..., w^3`.
    pub minus_basis: Vec<Vec<u64>>,
    /// Local coordinate used at each point over `F_27`: `"u"` or `"v"`.
    pub uniformizers: Vec<String>,
    /// `M_ij` in coordinates over `F_27`.
    pub matrix: Vec<Vec<Vec<u64>>>,
    pub rank: usize,
    /// Ranks after random basis changes and uniformizer rescalings.
    pub perturbed_ranks: Vec<usize>,
}

/// Sign by which `w5` acts on `du / F_v`.
fn residue_sign(fp: &PrimeField, form: &Form<PrimeField>) -> Result<i64> {
    let fv = form.partial(fp, 1);
    let twisted = fv.sign_twist(fp, data::W5_SIGNS);
    let s = if twisted == fv {
        1
    } else if twisted == fv.scale(fp, &fp.neg(&1)) {
        -1
    } else {
        return Err(Error::Inconsistent("F_v is not an eigenform of w5".into()));
    };
    Ok(s * data::W5_SIGNS[0] as i64 * data::W5_SIGNS[2] as i64)
}

/// `w5*` on adjoint cubics, its `-1` eigenspace, and the rank of
/// `M_ij = (omega_i / du_j)(P_j)` at the geometric points of `c_inf`.
pub fn formal_immersion(rr: &PlaneRR<'_>, cusps: &ReducedCusps) -> Result<FormalImmersionCertificate> {
    let model = rr.model;
    let fp = *model.prime_field();
    let form = model.form();
    let mons = monomials(3);
    let adj = rr.adjoint_forms(3);
    let basis: Vec<Vec<u64>> = adj.iter().map(|g| form_vector(&fp, g, &mons)).collect();
    let sign = residue_sign(&fp, form)?;
    let sign_el = fp.from_i64(sign);
    let mut w: linalg::Matrix<PrimeField> = Vec::new();
    for g in &adj {
        let t = g.sign_twist(&fp, data::W5_SIGNS).scale(&fp, &sign_el);
        let c = span_coords(&fp, &basis, &form_vector(&fp, &t, &mons))
            .ok_or_else(|| Error::Inconsistent("w5 does not preserve the adjoint cubics".into()))?;
        w.push(c);
    }
    // rows of w are images; w * w must be the identity
    let n = adj.len();
    let ww = linalg::mat_mul(&fp, &w, &w);
    let ident = (0..n).all(|i| (0..n).all(|j| ww[i][j] == u64::from(i == j)));
    if !ident {
        return Err(Error::Inconsistent("w5* does not square to the identity".into()));
    }
    let shifted = |s: u64| -> linalg::Matrix<PrimeField> {
        (0..n)
            .map(|j| (0..n).map(|i| fp.sub(&w[i][j], &if i == j { s } else { 0 })).collect())
            .collect()
    };
    let plus = fp.kernel(shifted(1), n);
    let minus = fp.kernel(shifted(fp.neg(&1)), n);
    let minus_forms: Vec<Vec<u64>> = minus
        .iter()
        .map(|c| {
            (0..mons.len())
                .map(|r| (0..n).fold(0, |acc, i| fp.add(&acc, &fp.mul(&c[i], &basis[i][r]))))
                .collect()
        })
        .collect();

    let l = &cusps.f27;
    let pts: Vec<[Vec<u64>; 3]> = (0..3)
        .map(|j| {
            let c = &cusps.infinity_point;
            [place::frobenius_pow(l, &c[0], j), place::frobenius_pow(l, &c[1], j), place::frobenius_pow(l, &c[2], j)]
        })
        .collect();
    let embed = |c: &u64| l.from_base(c);
    let fu = form.partial(&fp, 0);
    let fv = form.partial(&fp, 1);
    let eval_vec = |v: &[u64], pt: &[Vec<u64>; 3]| {
        let g = Form::from_coeffs(&fp, 3, &mons, v);
        g.eval_in(l, embed, pt)
    };
    let mut uniformizers = Vec::new();
    let mut denominators = Vec::new();
    for pt in &pts {
        let w0 = l.inv(&pt[2]).ok_or_else(|| Error::Inconsistent("cusp on the line w = 0".into()))?;
        let aff = [l.mul(&pt[0], &w0), l.mul(&pt[1], &w0), l.one()];
        let dv = fv.eval_in(l, embed, &aff);
        let du = fu.eval_in(l, embed, &aff);
        if !l.is_zero(&dv) {
            uniformizers.push("u".to_string());
            denominators.push((aff, dv));
        } else if !l.is_zero(&du) {
            uniformizers.push("v".to_string());
            denominators.push((aff, l.neg(&du)));
        } else {
            return Err(Error::Inconsistent("both partials vanish at a smooth point".into()));
        }
    }
    let matrix: linalg::Matrix<Fq> = minus_forms
        .iter()
        .map(|v| {
            denominators
                .iter()
                .map(|(aff, den)| l.mul(&eval_vec(v, aff), &l.inv(den).expect("nonzero")))
                .collect()
        })
        .collect();
    let rank = linalg::rank(l, &matrix, pts.len());

    let mut rng = ChaCha8Rng::seed_from_u64(RANK_SEED);
    let mut perturbed = Vec::new();
    let m = matrix.len();
    while perturbed.len() < 20 {
        let change: linalg::Matrix<Fq> =
            (0..m).map(|_| (0..m).map(|_| l.from_base(&rng.gen_range(0..3))).collect()).collect();
        if l.is_zero(&linalg::det(l, &change)) {
            continue;
        }
        let scales: Vec<Vec<u64>> = (0..pts.len())
            .map(|_| loop {
                let s = l.element(rng.gen_range(1..27));
                if !l.is_zero(&s) {
                    break s;
                }
            })
            .collect();
        let mixed = linalg::mat_mul(l, &change, &matrix);
        let scaled: linalg::Matrix<Fq> =
            mixed.iter().map(|r| r.iter().zip(&scales).map(|(a, s)| l.mul(a, s)).collect()).collect();
        perturbed.push(linalg::rank(l, &scaled, pts.len()));
    }

    Ok(FormalImmersionCertificate {
        plus_dim: plus.len(),
        minus_dim: minus.len(),
        minus_basis: minus_forms,
        uniformizers,
        matrix: matrix.iter().map(|r| r.iter().map(|a| l.coords(a)).collect()).collect(),
        rank,
        perturbed_ranks: perturbed,
    })
}

// ---------------------------------------------------------------------------
// Driver

pub const TRUSTED: [&str; 3] = [
    "A(Q) is finite (Kolyvagin-Logachev), so J(Q) torsion controls the classes used",
    "reduction mod 3 is injective on the rational torsion of the Jacobian",
    "the formal immersion criterion for X^(3) at the cusps: rank 3 of M mod 3 gives injectivity of X^(3) -> J at the cusps",
];

fn verdict(checks: &mut CheckSet, failed: Option<&str>, skipped17: bool) {
    let claim = "X^(3)(Q) = {c0, c_inf}: every machine-checkable step verified";
    match failed {
        Some(step) => checks.record("b5ns7.verdict", claim, "PASS", Source::Published, format!("FAIL at {step}"), false),
        None if skipped17 => checks.record(
            "b5ns7.verdict",
            claim,
            "PASS",
            Source::Published,
            "PASS except torsion refinement (unchecked)",
            true,
        ),
        None => checks.record("b5ns7.verdict", claim, "PASS", Source::Published, "PASS", true),
    };
}

/// Run every step in dependency order; stops at the first failing step.
pub fn run(input: &Input, opts: &Options, checks: &mut CheckSet) -> Result<B5ns7Summary> {
    let mut summary = B5ns7Summary::default();
    for t in TRUSTED {
        checks.trust(t);
    }
    macro_rules! fail {
        ($step:expr) => {{
            verdict(checks, Some($step), opts.skip_lpoly17);
            return Ok(summary);
        }};
    }

    if !checks.timed("b5ns7.model", |c| verify_model(input, c))? {
        fail!("model");
    }
    let model3 = match model_mod(3, input) {
        Ok(m) => m,
        Err(e) => {
            checks.error("b5ns7.zeta3.reduction", "the reduction mod 3 has 4 ordinary nodes", 4, Source::Elementary, &e);
            fail!("cusps");
        }
    };
    let Some(cusps) = checks.timed("b5ns7.cusps", |c| verify_cusps(input, &model3, c))? else {
        fail!("cusps");
    };
    let Some(z3) = checks.timed("b5ns7.zeta3", |c| zeta(&model3, ORDER_F3, opts, c))? else {
        fail!("zeta3");
    };
    summary.zeta.push(z3.clone());

    let rr = PlaneRR::new(&model3);
    let group = PlaneClassGroup::new(PlaneRR::new(&model3))?;
    let Some(jac) = checks.timed("b5ns7.jac", |c| jacobian_f3(&group, &cusps, c))? else {
        fail!("jacobian");
    };
    summary.invariant_factors = jac.invariant_factors.clone();

    if opts.skip_lpoly17 {
        checks.unchecked(
            "b5ns7.torsion.refinement",
            "J(Q)_tors embeds in Z/7 (needs the zeta function at 17)",
            1,
            Source::Regression,
            "--skip-lpoly17",
        );
    } else {
        let model17 = match model_mod(17, input) {
            Ok(m) => m,
            Err(e) => {
                checks.error("b5ns7.zeta17.reduction", "the reduction mod 17 has 4 ordinary nodes", 4, Source::Elementary, &e);
                fail!("zeta17");
            }
        };
        let Some(z17) = checks.timed("b5ns7.zeta17", |c| zeta(&model17, ORDER_F17, opts, c))? else {
            fail!("zeta17");
        };
        summary.zeta.push(z17.clone());
        if !checks.timed("b5ns7.torsion", |c| torsion_refinement(&jac, &z3, &z17, c))? {
            fail!("torsion refinement");
        }
    }

    let Some(points) = checks.timed("b5ns7.sym_cube", |c| check_sym_cube(&model3, &cusps, &z3, c)) else {
        fail!("sym cube");
    };
    summary.sym_cube = points.len();
    let (ok_sieve, hits) = checks.timed("b5ns7.sieve", |c| check_sieve(&rr, &points, &cusps, c))?;
    summary.hits = hits;
    if !ok_sieve {
        fail!("sieve");
    }
    match checks.timed("b5ns7.immersion", |c| check_immersion(&rr, &cusps, c)) {
        Ok(Some(rank)) => summary.immersion_rank = Some(rank),
        Ok(None) => fail!("formal immersion"),
        Err(e) => {
            checks.error("b5ns7.immersion.rank", "rank of M over F_27", 3, Source::Published, &e);
            fail!("formal immersion");
        }
    }
    verdict(checks, None, opts.skip_lpoly17);
    Ok(summary)
}

/// A single step of the pipeline, for the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Model,
    Cusps,
    Jacobian,
    Sieve,
    FormalImmersion,
}

/// Run `step` after its prerequisites. Prerequisite records are only kept
/// when one of them fails.
pub fn run_step(step: Step, input: &Input, opts: &Options, checks: &mut CheckSet) -> Result<bool> {
    if step == Step::Model {
        return verify_model(input, checks);
    }
    let mut pre = CheckSet::new();
    let model3 = model_mod(3, input)?;
    let Some(cusps) = verify_cusps(input, &model3, &mut pre)? else {
        checks.extend(pre);
        return Ok(false);
    };
    if step == Step::Cusps {
        checks.extend(pre);
        return Ok(true);
    }
    let rr = PlaneRR::new(&model3);
    match step {
        Step::Jacobian => {
            let group = PlaneClassGroup::new(PlaneRR::new(&model3))?;
            Ok(jacobian_f3(&group, &cusps, checks)?.is_some())
        }
        Step::Sieve => {
            let Some(z3) = zeta(&model3, ORDER_F3, opts, &mut pre)? else {
                checks.extend(pre);
                return Ok(false);
            };
            let Some(points) = check_sym_cube(&model3, &cusps, &z3, checks) else {
                return Ok(false);
            };
            Ok(check_sieve(&rr, &points, &cusps, checks)?.0)
        }
        _ => Ok(check_immersion(&rr, &cusps, checks)?.is_some()),
    }
}

/// `N_1..N_max_k` at `p`, with the L-polynomial checks when `max_k >= 6`
/// and the published order at 3 and 17.
pub fn lpoly(p: u64, max_k: usize, input: &Input, opts: &Options, checks: &mut CheckSet) -> Result<bool> {
    let model = match model_mod(p, input) {
        Ok(m) => m,
        Err(e) => {
            checks.error(&format!("b5ns7.lpoly{p}.reduction"), &format!("the reduction mod {p} has 4 ordinary nodes"), 4, Source::Elementary, &e);
            return Ok(false);
        }
    };
    let published = match p {
        3 => Some(ORDER_F3),
        17 => Some(ORDER_F17),
        _ => None,
    };
    if let (Some(order), true) = (published, max_k == GENUS as usize) {
        return Ok(zeta(&model, order, opts, checks)?.is_some());
    }
    let id = |s: &str| format!("b5ns7.lpoly{p}.{s}");
    if !checks.record(&id("reduction"), &format!("the reduction mod {p} has 4 ordinary nodes"), 4, Source::Elementary, model.node_count(), model.node_count() == 4 && model.genus() == GENUS) {
        return Ok(false);
    }
    let cache = opts.cache_dir.as_ref().map(|d| CountCache::new(d, &model));
    let (counts, _) = Counter::new(&model)?.smooth_counts_cached(max_k, cache.as_ref())?;
    let bound_ok = counts.iter().enumerate().all(|(i, n)| {
        let qk = (p as i128).pow(i as u32 + 1);
        let t = *n as i128 - qk - 1;
        t * t <= 4 * (GENUS as i128).pow(2) * qk
    });
    let mut ok = checks.record(&id("counts"), "N_k within the Hasse-Weil bound", "|N_k - q^k - 1| <= 2g q^(k/2)", Source::Elementary, &counts, bound_ok);
    if max_k >= GENUS as usize {
        let l = LPolynomial::from_counts(p, GENUS as usize, &counts)?;
        ok &= checks.expect_eq(&id("functional_equation"), "a_(12-i) = q^(6-i) a_i", true, Source::Elementary, l.functional_equation_holds());
        ok &= checks.expect_eq(&id("weil"), "all inverse roots have absolute value sqrt(q)", true, Source::Elementary, l.satisfies_weil());
        checks.record(&id("order"), &format!("#J(F_{p}) = L(1)"), "computed", Source::Elementary, l.at_one().to_string(), true);
    }
    Ok(ok)
}

/// `#X^(3)(F_3) = 40`, the counting formula, and both cusps in the list.
pub fn check_sym_cube(
    model3: &PlaneModel,
    cusps: &ReducedCusps,
    z3: &ZetaData,
    checks: &mut CheckSet,
) -> Option<Vec<SymCubePoint>> {
    let points = enumerate_sym_cube(model3, cusps);
    let (n1, n2, n3) = (z3.counts[0], z3.counts[1], z3.counts[2]);
    let formula = n1 * (n1 + 1) * (n1 + 2) / 6 + n1 * (n2 - n1) / 2 + (n3 - n1) / 3;
    let ok_n = checks.expect_eq("b5ns7.sym_cube.size", "#X^(3)(F_3)", 40, Source::Published, points.len());
    let ok_f = checks.expect_eq(
        "b5ns7.sym_cube.formula",
        "C(N1+2, 3) + N1 B2 + B3 from the point counts",
        points.len() as u64,
        Source::Elementary,
        formula,
    );
    let labels: Vec<&str> = points.iter().map(|p| p.label.as_str()).filter(|l| l.starts_with('c')).collect();
    let ok_c = checks.expect_eq("b5ns7.sym_cube.cusps", "both reduced cusps occur", vec!["c0", "c_inf"], Source::Published, labels);
    (ok_n && ok_f && ok_c).then_some(points)
}

/// The 280 principality tests and their consistency checks.
pub fn check_sieve(
    rr: &PlaneRR<'_>,
    points: &[SymCubePoint],
    cusps: &ReducedCusps,
    checks: &mut CheckSet,
) -> Result<(bool, Vec<(String, i64)>)> {
    let model = rr.model;
    let (tests, hits) = run_sieve(rr, points, cusps)?;
    let pairs: Vec<(String, i64)> = hits.iter().map(|h| (h.y.clone(), h.k)).collect();
    let ok_tests = checks.expect_eq("b5ns7.sieve.tests", "pairs (y, k) tested", 280, Source::Elementary, tests);
    let ok_hits = checks.record(
        "b5ns7.sieve.hits",
        "y - w5(y) ~ k (c0 - c_inf) only for (c0, 1) and (c_inf, -1)",
        vec![("c0".to_string(), 1), ("c_inf".to_string(), -1)],
        Source::Published,
        &hits,
        pairs == [("c0".to_string(), 1), ("c_inf".to_string(), -1)],
    );
    let sym = sieve_symmetric(model, points, &hits)?;
    let ok_sym = checks.expect_eq("b5ns7.sieve.symmetry", "(y, k) is a hit iff (w5 y, -k) is", true, Source::Elementary, sym);
    let diff = &Divisor::place(cusps.zero.clone()) - &Divisor::place(cusps.infinity.clone());
    let c0 = Divisor::place(cusps.zero.clone());
    let shifted = &(&c0 - &model.apply_signs(&c0, data::W5_SIGNS)?) - &diff.scale(8);
    let ok_shift = checks.expect_eq(
        "b5ns7.sieve.period",
        "k = 8 is a hit for c0 as well (k and k + 7 agree)",
        true,
        Source::Elementary,
        rr.is_principal(&shifted)?.0,
    );
    Ok((ok_tests && ok_hits && ok_sym && ok_shift, pairs))
}

/// Eigenspace dimensions, rank 3 and its invariance. Returns the rank when
/// every check passed.
pub fn check_immersion(rr: &PlaneRR<'_>, cusps: &ReducedCusps, checks: &mut CheckSet) -> Result<Option<usize>> {
    let cert = formal_immersion(rr, cusps)?;
    let ok_dims = checks.expect_eq(
        "b5ns7.immersion.eigenspaces",
        "dimensions of the +1 and -1 eigenspaces of w5* on differentials",
        (2, 4),
        Source::Published,
        (cert.plus_dim, cert.minus_dim),
    );
    let ok_rank = checks.record("b5ns7.immersion.rank", "rank of M over F_27", 3, Source::Published, &cert, cert.rank == 3);
    let ok_inv = checks.expect_eq(
        "b5ns7.immersion.invariance",
        "rank after 20 random basis changes and uniformizer rescalings",
        vec![3usize; 20],
        Source::Elementary,
        cert.perturbed_ranks.clone(),
    );
    Ok((ok_dims && ok_rank && ok_inv).then_some(cert.rank))
}

fn sieve_symmetric(model: &PlaneModel, points: &[SymCubePoint], hits: &[SieveHit]) -> Result<bool> {
    let is_hit = |label: &str, k: i64| hits.iter().any(|h| h.y == label && h.k == k);
    for h in hits {
        let p = points.iter().find(|p| p.label == h.y).expect("hit label comes from the list");
        let image = model.apply_signs(&p.divisor(), data::W5_SIGNS)?;
        let q = points
            .iter()
            .find(|q| q.divisor() == image)
            .ok_or_else(|| Error::Inconsistent("w5 image of a degree-3 divisor is not in the list".into()))?;
        if !is_hit(&q.label, -h.k) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_inversion_recovers_places() {
        let b = vec![0, 4, 3, 8];
        let n = counts_from_places(&b);
        assert_eq!(places_from_counts(&n).unwrap(), b);
        assert!(places_from_counts(&[4, 5]).is_none());
    }

    #[test]
    fn model_checks_pass_on_published_data() {
        let mut c = CheckSet::new();
        assert!(verify_model(&Input::default(), &mut c).unwrap(), "{:#?}", c.records);
    }

    #[test]
    fn eta_minpoly_printing() {
        assert_eq!(poly_string(&eta::as_rationals(&eta::eta_minpoly_coeffs())), "t^3 - 7t^2 + 7t + 7");
    }

    #[test]
    fn unit_root_multiplicity() {
        // (1 - T)^2 (1 + T) has the root 1 twice
        assert_eq!(unit_root_multiplicity_mod(&[1, -1, -1, 1], 7).unwrap(), 2);
    }
}
