//! Property checks shared by the proptest suites and the acceptance run.
//! Each takes plain indices so either a strategy or a seeded RNG can drive it.

#![allow(dead_code)]

use modcurve::algebra::ext::Fq;
use modcurve::algebra::field::{Field, FiniteField};
use modcurve::algebra::poly;
use modcurve::algebra::prime::PrimeField;
use modcurve::curve::count::count_roots_fp;
use modcurve::curve::form::monomials;
use modcurve::curve::{Divisor, Form, PlaceKey, PlaneModel};
use modcurve::data;
use modcurve::rr::hyperelliptic::{HypDivisor, HypFunction, HypPlace, Hyperelliptic};
use modcurve::rr::plane::PlaneRR;

pub type Check = Result<(), String>;

pub fn sextic_mod_3() -> PlaneModel {
    let fp = PrimeField::new(3).unwrap();
    PlaneModel::new(fp, data::sextic_mod(&fp)).unwrap()
}

pub fn octic_mod(p: u64) -> Hyperelliptic<PrimeField> {
    let k = PrimeField::new(p).unwrap();
    Hyperelliptic::new(k, data::octic().iter().map(|c| k.from_i64(*c)).collect()).unwrap()
}

pub struct PlaneFixture {
    pub model: PlaneModel,
    pub places: Vec<PlaceKey>,
}

impl PlaneFixture {
    pub fn new() -> Self {
        let model = sextic_mod_3();
        let places = model.places_up_to(2);
        PlaneFixture { model, places }
    }

    pub fn divisor(&self, terms: &[(usize, i64)]) -> Divisor {
        let mut d = Divisor::zero();
        for (i, c) in terms {
            d.add_term(self.places[i % self.places.len()].clone(), *c);
        }
        d
    }

    /// A nonzero form of degree `deg` from coefficient digits.
    pub fn form(&self, deg: u32, digits: &[u64]) -> Form<PrimeField> {
        let fp = *self.model.prime_field();
        let mons = monomials(deg);
        let mut c: Vec<u64> = mons.iter().enumerate().map(|(i, _)| digits.get(i).copied().unwrap_or(0) % 3).collect();
        if c.iter().all(|x| *x == 0) {
            c[0] = 1;
        }
        Form::from_coeffs(&fp, deg, &mons, &c)
    }
}

/// `l(D) - l(K - D) = deg D - g + 1` on the plane sextic.
pub fn plane_riemann_roch(fx: &PlaneFixture, terms: &[(usize, i64)]) -> Check {
    let rr = PlaneRR::new(&fx.model);
    let k = rr.canonical_divisor().map_err(|e| e.to_string())?;
    let d = fx.divisor(terms);
    let l = rr.dimension(&d).map_err(|e| e.to_string())? as i64;
    let lk = rr.dimension(&(&k - &d)).map_err(|e| e.to_string())? as i64;
    let g = fx.model.genus();
    if l - lk == d.degree() - g + 1 {
        Ok(())
    } else {
        Err(format!("l(D) = {l}, l(K-D) = {lk}, deg = {} for {d:?}", d.degree()))
    }
}

/// Intersection with a form of degree `m` has total degree `6m`.
pub fn bezout(fx: &PlaneFixture, deg: u32, digits: &[u64]) -> Check {
    let g = fx.form(deg, digits);
    let div = fx.model.intersection_divisor(&g).map_err(|e| e.to_string())?;
    let expect = 6 * deg as i64;
    if div.degree() == expect && div.is_effective() {
        Ok(())
    } else {
        Err(format!("degree {} instead of {expect}", div.degree()))
    }
}

/// `div(g/h)` is principal and the returned witness has divisor `-D`,
/// recomputed here from intersection divisors.
pub fn plane_witness(fx: &PlaneFixture, deg: u32, a: &[u64], b: &[u64]) -> Check {
    let rr = PlaneRR::new(&fx.model);
    let (g, h) = (fx.form(deg, a), fx.form(deg, b));
    let m = &fx.model;
    let d = &m.intersection_divisor(&g).map_err(|e| e.to_string())? - &m.intersection_divisor(&h).map_err(|e| e.to_string())?;
    let (ok, w) = rr.is_principal(&d).map_err(|e| e.to_string())?;
    let (gw, hw) = w.ok_or_else(|| format!("no witness (principal = {ok})"))?;
    let re = &m.intersection_divisor(&gw).map_err(|e| e.to_string())? - &m.intersection_divisor(&hw).map_err(|e| e.to_string())?;
    if ok && re == -&d {
        Ok(())
    } else {
        Err("witness divisor differs from -D".into())
    }
}

pub struct HypFixture {
    pub curve: Hyperelliptic<PrimeField>,
    pub places: Vec<HypPlace<PrimeField>>,
}

impl HypFixture {
    pub fn new(p: u64) -> Self {
        let curve = octic_mod(p);
        let places = curve.places_up_to(2);
        HypFixture { curve, places }
    }

    pub fn divisor(&self, terms: &[(usize, i64)]) -> HypDivisor<PrimeField> {
        let mut d = HypDivisor::zero();
        for (i, c) in terms {
            d.add_term(self.places[i % self.places.len()].clone(), *c);
        }
        d
    }

    /// `div(m(x))` for the place `P` with `x`-polynomial `m`, written by hand.
    fn div_of_x_poly(&self, p: &HypPlace<PrimeField>) -> Option<HypDivisor<PrimeField>> {
        let k = self.curve.field;
        let (m, zeros) = match p {
            HypPlace::Point { m, r } if r.is_empty() => (m, vec![(p.clone(), 2)]),
            HypPlace::Point { m, r } => {
                let conj = HypPlace::Point { m: m.clone(), r: poly::trimmed(&k, poly::neg(&k, r)) };
                (m, vec![(p.clone(), 1), (conj, 1)])
            }
            HypPlace::Conjugate { m } => (m, vec![(p.clone(), 1)]),
            _ => return None,
        };
        let d = (m.len() - 1) as i64;
        let mut out = HypDivisor::from_terms(&zeros);
        out.add_term(HypPlace::InfPlus, -d);
        out.add_term(HypPlace::InfMinus, -d);
        Some(out)
    }
}

/// `l(D) - l(K - D) = deg D - g + 1` on the octic.
pub fn hyp_riemann_roch(fx: &HypFixture, terms: &[(usize, i64)]) -> Check {
    let c = &fx.curve;
    let d = fx.divisor(terms);
    let k = c.canonical_divisor();
    let l = c.dimension(&d).map_err(|e| e.to_string())? as i64;
    let lk = c.dimension(&k.sub(&d)).map_err(|e| e.to_string())? as i64;
    if l - lk == d.degree() - c.genus() + 1 {
        Ok(())
    } else {
        Err(format!("l(D) = {l}, l(K-D) = {lk} for {d:?}"))
    }
}

/// A combination of divisors of `x`-polynomials is principal; its witness
/// is re-evaluated on the support and must give `-D`. Shifting by
/// `inf- - inf+` (order 24 in `J(F_3)`) must break principality.
pub fn hyp_witness(fx: &HypFixture, terms: &[(usize, i64)]) -> Check {
    let c = &fx.curve;
    let mut d = HypDivisor::zero();
    for (i, n) in terms {
        if let Some(e) = fx.div_of_x_poly(&fx.places[i % fx.places.len()]) {
            d = d.add(&e.scale(*n));
        }
    }
    let (ok, g): (bool, Option<HypFunction<PrimeField>>) = c.is_principal(&d).map_err(|e| e.to_string())?;
    let g = g.ok_or_else(|| format!("no witness (principal = {ok})"))?;
    let support: Vec<_> = d.terms.iter().map(|(p, _)| p.clone()).collect();
    let re = c.divisor_on(&g, &support).map_err(|e| e.to_string())?;
    if !re.same_as(&d.scale(-1)) {
        return Err("witness divisor differs from -D".into());
    }
    let shifted = d.add(&HypDivisor::from_terms(&[(HypPlace::InfMinus, 1), (HypPlace::InfPlus, -1)]));
    if c.is_principal(&shifted).map_err(|e| e.to_string())?.0 {
        return Err("shift by a class of order 24 stayed principal".into());
    }
    Ok(())
}

/// Field axioms on three elements given by index.
pub fn field_axioms<F: FiniteField>(f: &F, i: u64, j: u64, l: u64) -> Check {
    let q = f.order_u64().unwrap();
    let (a, b, c) = (f.element(i % q), f.element(j % q), f.element(l % q));
    let eq = |x: F::Elem, y: F::Elem, what: &str| if x == y { Ok(()) } else { Err(format!("{what} fails")) };
    eq(f.add(&a, &b), f.add(&b, &a), "additive commutativity")?;
    eq(f.mul(&a, &b), f.mul(&b, &a), "multiplicative commutativity")?;
    eq(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)), "additive associativity")?;
    eq(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)), "multiplicative associativity")?;
    eq(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)), "distributivity")?;
    eq(f.add(&a, &f.neg(&a)), f.zero(), "additive inverse")?;
    eq(f.sub(&a, &b), f.add(&a, &f.neg(&b)), "subtraction")?;
    eq(f.mul(&a, &f.one()), a.clone(), "multiplicative identity")?;
    eq(f.pow(&a, q), a.clone(), "a^q = a")?;
    eq(f.frobenius(&f.mul(&a, &b)), f.mul(&f.frobenius(&a), &f.frobenius(&b)), "Frobenius")?;
    match f.inv(&a) {
        Some(ai) => eq(f.mul(&a, &ai), f.one(), "multiplicative inverse"),
        None if f.is_zero(&a) => Ok(()),
        None => Err("nonzero element without inverse".into()),
    }
}

/// Roots in `F_(p^k)` of a polynomial over `F_p`, counted two ways.
pub fn root_count(p: u64, k: usize, coeffs: &[u64]) -> Check {
    let fp = PrimeField::new(p).unwrap();
    let mut a: Vec<u64> = coeffs.iter().map(|c| c % p).collect();
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    if a.iter().all(|c| *c == 0) {
        return Ok(());
    }
    let fq = Fq::canonical(p, k).unwrap();
    let lifted: Vec<_> = a.iter().map(|c| fq.from_base(c)).collect();
    let brute = (0..fq.order_u64().unwrap()).filter(|i| fq.is_zero(&poly::eval(&fq, &lifted, &fq.element(*i)))).count();
    let fast = count_roots_fp(&fp, k, &a).map_err(|e| e.to_string())?;
    if fast == brute {
        Ok(())
    } else {
        Err(format!("{fast} roots counted, {brute} by enumeration, for {a:?} over F_{p}^{k}"))
    }
}
