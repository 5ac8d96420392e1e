//! Homogeneous polynomials in `u, v, w`.

use std::collections::BTreeMap;

use crate::algebra::bivariate::{bi_trim, BiPoly};
use crate::algebra::field::Field;
use crate::algebra::poly;

/// Affine charts of the projective plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Chart {
    /// `w = 1`, coordinates `(x, y) = (u/w, v/w)`.
    W,
    /// `v = 1`, coordinates `(x, y) = (u/v, w/v)`.
    V,
    /// `u = 1`, coordinates `(x, y) = (v/u, w/u)`.
    U,
}

impl Chart {
    /// Exponents `(i, j)` of `x^i y^j` for the monomial `u^a v^b w^c`.
    pub fn exponents(self, e: [u32; 3]) -> (u32, u32) {
        match self {
            Chart::W => (e[0], e[1]),
            Chart::V => (e[0], e[2]),
            Chart::U => (e[1], e[2]),
        }
    }

    /// Projective coordinates of the affine point `(x, y)`.
    pub fn to_projective<E: Clone>(self, x: E, y: E, one: E) -> [E; 3] {
        match self {
            Chart::W => [x, y, one],
            Chart::V => [x, one, y],
            Chart::U => [one, x, y],
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Form<F: Field> {
    pub degree: u32,
    /// Exponent triple `[a, b, c]` of `u^a v^b w^c` to nonzero coefficient.
    pub terms: BTreeMap<[u32; 3], F::Elem>,
}

/// Monomials of degree `d`, in the order `u^d, u^{d-1} v, ..., w^d`.
pub fn monomials(d: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for b in (0..=d - a).rev() {
            out.push([a, b, d - a - b]);
        }
    }
    out
}

impl<F: Field> Form<F> {
    pub fn zero(degree: u32) -> Self {
        Form { degree, terms: BTreeMap::new() }
    }

    pub fn from_terms(field: &F, degree: u32, terms: &[([u32; 3], i64)]) -> Self {
        let mut out = Self::zero(degree);
        for (e, c) in terms {
            assert_eq!(e.iter().sum::<u32>(), degree, "inhomogeneous term");
            out.add_term(field, *e, &field.from_i64(*c));
        }
        out
    }

    pub fn monomial(field: &F, e: [u32; 3]) -> Self {
        let mut out = Self::zero(e.iter().sum());
        out.terms.insert(e, field.one());
        out
    }

    pub fn add_term(&mut self, field: &F, e: [u32; 3], c: &F::Elem) {
        let cur = self.terms.remove(&e).unwrap_or_else(|| field.zero());
        let s = field.add(&cur, c);
        if !field.is_zero(&s) {
            self.terms.insert(e, s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(field, *e, c);
        }
        out
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        let mut out = Self::zero(self.degree);
        for (e, x) in &self.terms {
            out.add_term(field, *e, &field.mul(x, c));
        }
        out
    }

    pub fn mul(&self, field: &F, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]];
                out.add_term(field, e, &field.mul(c1, c2));
            }
        }
        out
    }

    /// Linear combination of monomials of degree `d`.
    pub fn from_coeffs(field: &F, d: u32, basis: &[[u32; 3]], coeffs: &[F::Elem]) -> Self {
        let mut out = Self::zero(d);
        for (e, c) in basis.iter().zip(coeffs) {
            out.add_term(field, *e, c);
        }
        out
    }

    pub fn map<G: Field>(&self, g: &G, phi: impl Fn(&F::Elem) -> G::Elem) -> Form<G> {
        let mut out = Form::zero(self.degree);
        for (e, c) in &self.terms {
            out.add_term(g, *e, &phi(c));
        }
        out
    }

    /// Partial derivative in variable `var` (0 = u, 1 = v, 2 = w).
    pub fn partial(&self, field: &F, var: usize) -> Self {
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            out.add_term(field, e2, &field.mul(c, &field.from_i64(e[var] as i64)));
        }
        out
    }

    /// `G(su u, sv v, sw w)` for signs `s in {1, -1}`.
    pub fn sign_twist(&self, field: &F, signs: [i32; 3]) -> Self {
        let mut out = Self::zero(self.degree);
        for (e, c) in &self.terms {
            let odd = (0..3).filter(|&i| signs[i] < 0 && e[i] % 2 == 1).count();
            let c2 = if odd % 2 == 1 { field.neg(c) } else { c.clone() };
            out.add_term(field, *e, &c2);
        }
        out
    }

    /// Evaluate at a point whose coordinates live in another field.
    pub fn eval_in<G: Field>(&self, g: &G, embed: impl Fn(&F::Elem) -> G::Elem, pt: &[G::Elem; 3]) -> G::Elem {
        let mut acc = g.zero();
        for (e, c) in &self.terms {
            let mut t = embed(c);
            for i in 0..3 {
                if e[i] > 0 {
                    t = g.mul(&t, &g.pow(&pt[i], e[i] as u64));
                }
            }
            acc = g.add(&acc, &t);
        }
        acc
    }

    pub fn eval(&self, field: &F, pt: &[F::Elem; 3]) -> F::Elem {
        self.eval_in(field, |c| c.clone(), pt)
    }

    /// Dehomogenize in a chart: `sum_j a_j(x) y^j`.
    pub fn dehomogenize(&self, field: &F, chart: Chart) -> BiPoly<F> {
        let mut out: BiPoly<F> = Vec::new();
        for (e, c) in &self.terms {
            let (i, j) = chart.exponents(*e);
            let (i, j) = (i as usize, j as usize);
            if out.len() <= j {
                out.resize(j + 1, Vec::new());
            }
            if out[j].len() <= i {
                out[j].resize(i + 1, field.zero());
            }
            out[j][i] = field.add(&out[j][i], c);
        }
        bi_trim(field, &mut out);
        out
    }

    /// Binary form `G(x, 1, 0)` as a polynomial in `x`.
    pub fn at_infinity_v(&self, field: &F) -> poly::Poly<F> {
        let mut out = vec![field.zero(); self.degree as usize + 1];
        for (e, c) in &self.terms {
            if e[2] == 0 {
                out[e[0] as usize] = field.add(&out[e[0] as usize], c);
            }
        }
        poly::trimmed(field, out)
    }
}
