//! Closed points of the smooth model of a plane curve over `F_p`.
//!
//! A place is identified by a triangular key: the chart it is affine in,
//! the minimal polynomial `phi(x)` of its first coordinate over `F_p`, the
//! minimal polynomial `psi(y)` of the second over `F_p(x)`, and at a node the
//! minimal polynomial `chi(z)` of the branch slope over the point's residue
//! field. Keys are independent of any chosen root, so conjugate points give
//! equal keys.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::ext::{ExtField, Fq};
use crate::algebra::field::{Field, FiniteField};
use crate::algebra::linalg;
use crate::algebra::poly::Poly;
use crate::algebra::prime::PrimeField;

pub use super::form::Chart;

/// Which local coordinate is the uniformizer (after scaling at a node).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Param {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct PointKey {
    pub chart: Chart,
    /// Monic irreducible over `F_p`, little-endian.
    pub phi: Vec<u64>,
    /// Monic irreducible over `K = F_p[x]/phi`; each coefficient in `K` coordinates.
    pub psi: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct BranchKey {
    pub param: Param,
    /// Monic irreducible over the point's residue field, coefficients in its coordinates.
    pub chi: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct PlaceKey {
    pub point: PointKey,
    pub branch: Option<BranchKey>,
}

impl PointKey {
    pub fn degree(&self) -> usize {
        (self.phi.len() - 1) * (self.psi.len() - 1)
    }
}

impl PlaceKey {
    pub fn smooth(point: PointKey) -> Self {
        PlaceKey { point, branch: None }
    }

    pub fn degree(&self) -> usize {
        let e = self.branch.as_ref().map_or(1, |b| b.chi.len() - 1);
        self.point.degree() * e
    }
}

/// Evaluate a polynomial with `F_p` coefficients at an element of `m`.
/// With `coeffs` the coordinates of an element of a simple extension and `at`
/// the image of its generator, this is the induced embedding.
pub fn eval_fp_poly(m: &Fq, coeffs: &[u64], at: &[u64]) -> Vec<u64> {
    let mut acc = m.zero();
    for c in coeffs.iter().rev() {
        acc = m.mul(&acc, &at.to_vec());
        acc = m.add(&acc, &m.from_base(c));
    }
    acc
}

/// Result of rewriting a tower `base[s]/(modulus)` as a simple extension of `F_p`.
#[derive(Clone, Debug)]
pub struct Flat {
    pub field: Fq,
    /// Image of the generator of `base`.
    pub base_gen: Vec<u64>,
    /// Image of the class of `s`.
    pub top_gen: Vec<u64>,
    /// The primitive element used, as an element of the tower.
    pub gamma: Vec<Vec<u64>>,
}

/// Flatten `base[s]/(modulus)`; `modulus` must be irreducible over `base`.
pub fn flatten(base: &Fq, modulus: &Poly<Fq>) -> Flat {
    let fp = base.prime_field();
    let tower = ExtField::finite(base.clone(), modulus.clone());
    let n = tower.degree();
    let top = tower.generator();
    let total = base.order_u64().unwrap_or(u64::MAX);
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    let mut idx = 0u64;
    loop {
        let gamma = if idx < total.min(1 << 12) {
            tower.add(&top, &tower.from_base(&base.element(idx)))
        } else {
            let c: Vec<u64> = (0..n).map(|_| rng.gen_range(0..fp.p())).collect();
            tower.from_coords(&c)
        };
        idx += 1;
        let mut powers = Vec::with_capacity(n + 1);
        let mut cur = tower.one();
        for _ in 0..=n {
            powers.push(tower.coords(&cur));
            cur = tower.mul(&cur, &gamma);
        }
        let a: Vec<Vec<u64>> = (0..n).map(|r| (0..n).map(|i| powers[i][r]).collect()).collect();
        if linalg::rank(&fp, &a, n) < n {
            continue;
        }
        let c = linalg::solve(&fp, &a, &powers[n]).expect("independent powers");
        let mut mu: Vec<u64> = c.iter().map(|x| fp.neg(x)).collect();
        mu.push(1);
        let field = Fq::finite(fp, mu);
        let base_gen = linalg::solve(&fp, &a, &tower.coords(&tower.from_base(&base.generator()))).unwrap();
        let top_gen = linalg::solve(&fp, &a, &tower.coords(&top)).unwrap();
        return Flat { field, base_gen, top_gen, gamma };
    }
}

/// Repeated Frobenius.
pub fn frobenius_pow(m: &Fq, a: &[u64], times: usize) -> Vec<u64> {
    let mut out = a.to_vec();
    for _ in 0..times {
        out = m.frobenius(&out);
    }
    out
}

/// Minimal polynomial of `a` over the subfield of `m` of degree `step`,
/// as a monic polynomial with coefficients in `m`.
pub fn rel_minpoly(m: &Fq, a: &[u64], step: usize) -> Vec<Vec<u64>> {
    let mut conj = vec![a.to_vec()];
    loop {
        let next = frobenius_pow(m, conj.last().unwrap(), step);
        if next == conj[0] {
            break;
        }
        conj.push(next);
    }
    let mut out = vec![m.one()];
    for c in &conj {
        let nc = m.neg(c);
        let mut next = vec![m.zero(); out.len() + 1];
        for (i, x) in out.iter().enumerate() {
            next[i + 1] = m.add(&next[i + 1], x);
            next[i] = m.add(&next[i], &m.mul(x, &nc));
        }
        out = next;
    }
    out
}

/// Coordinates of `a` in the basis `1, g, ..., g^{d-1}`, if `a` lies in their span.
pub fn subfield_coords(m: &Fq, g: &[u64], d: usize, a: &[u64]) -> Option<Vec<u64>> {
    let fp = m.prime_field();
    let n = m.degree();
    let mut cols = Vec::with_capacity(d);
    let mut cur = m.one();
    for _ in 0..d {
        cols.push(cur.clone());
        cur = m.mul(&cur, &g.to_vec());
    }
    let mut aug: Vec<Vec<u64>> = (0..n)
        .map(|r| {
            let mut row: Vec<u64> = cols.iter().map(|c| c[r]).collect();
            row.push(a[r]);
            row
        })
        .collect();
    let pivots = linalg::rref(&fp, &mut aug, d + 1);
    if pivots.contains(&d) || pivots.len() != d {
        return None;
    }
    Some(aug.iter().map(|row| row[d]).collect())
}

/// Minimal polynomial of `a` over `F_p(g)` (degree `d` over `F_p`), with
/// coefficients given in the power basis of `g`.
pub fn rel_minpoly_coords(m: &Fq, a: &[u64], g: &[u64], d: usize) -> Vec<Vec<u64>> {
    rel_minpoly(m, a, d)
        .iter()
        .map(|c| subfield_coords(m, g, d, c).expect("coefficient lies in the subfield"))
        .collect()
}

/// Minimal polynomial over `F_p` of an element of `m`.
pub fn minpoly_fp(m: &Fq, a: &[u64]) -> Vec<u64> {
    rel_minpoly(m, a, 1)
        .iter()
        .map(|c| m.as_base(c).expect("symmetric function lies in F_p"))
        .collect()
}

/// `K = F_p[x]/phi` for a key polynomial.
pub fn field_of(fp: &PrimeField, phi: &[u64]) -> Fq {
    Fq::finite(*fp, phi.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_f3_tower() {
        let f9 = Fq::canonical(3, 2).unwrap();
        // s^3 - s - 1 over F_9
        let modulus = vec![f9.from_base(&2), f9.from_base(&2), f9.zero(), f9.one()];
        let flat = flatten(&f9, &modulus);
        let l = &flat.field;
        assert_eq!(l.degree(), 6);
        // the images satisfy the defining relations
        let i = &flat.base_gen;
        assert_eq!(l.add(&l.mul(i, i), &l.one()), l.zero());
        let s = &flat.top_gen;
        let s3 = l.mul(&l.mul(s, s), s);
        assert_eq!(l.sub(&l.sub(&s3, s), &l.one()), l.zero());
    }

    #[test]
    fn conjugates_give_equal_minpolys() {
        let m = Fq::canonical(3, 6).unwrap();
        let a = m.element(100);
        let b = m.frobenius(&a);
        assert_eq!(minpoly_fp(&m, &a), minpoly_fp(&m, &b));
        let g = m.pow(&m.generator(), 28); // generates F_27 inside F_729
        let d = minpoly_fp(&m, &g).len() - 1;
        assert_eq!(d, 3);
        let rel = rel_minpoly_coords(&m, &a, &g, d);
        let rel_b = rel_minpoly_coords(&m, &m.pow(&b, 27), &g, d);
        assert_eq!(rel.len(), rel_b.len());
    }
}
