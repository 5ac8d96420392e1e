//! Fixed input data: curve models, cusp coordinates, elliptic curves.

use crate::algebra::field::Field;
use crate::algebra::prime::PrimeField;
use crate::algebra::rational::Rationals;
use crate::curve::form::Form;

/// Terms `(exponents of u, v, w; coefficient)` of the genus-6 sextic.
pub const SEXTIC_TERMS: [([u32; 3], i64); 16] = [
    ([6, 0, 0], 5),
    ([5, 1, 0], -50),
    ([4, 2, 0], 206),
    ([3, 3, 0], -408),
    ([2, 4, 0], 321),
    ([1, 5, 0], 10),
    ([0, 6, 0], -100),
    ([4, 0, 2], 9),
    ([3, 1, 2], -60),
    ([2, 2, 2], 80),
    ([1, 3, 2], 48),
    ([0, 4, 2], 15),
    ([2, 0, 4], 3),
    ([1, 1, 4], -10),
    ([0, 2, 4], 6),
    ([0, 0, 6], -1),
];

/// The involution `(u:v:w) -> (-u:-v:w)` as coordinate signs.
pub const W5_SIGNS: [i32; 3] = [-1, -1, 1];

pub fn sextic_q() -> Form<Rationals> {
    Form::from_terms(&Rationals, 6, &SEXTIC_TERMS)
}

pub fn sextic_mod(fp: &PrimeField) -> Form<PrimeField> {
    Form::from_terms(fp, 6, &SEXTIC_TERMS)
}

/// Sextic with the coefficient of one term shifted by `delta`.
pub fn sextic_perturbed(term: usize, delta: i64) -> Vec<([u32; 3], i64)> {
    let mut t = SEXTIC_TERMS.to_vec();
    t[term].1 += delta;
    t
}

/// `(x^2 + x - 1)(x^6 - 5x^5 - 9x^3 - 5x - 1)`, the octic of the genus-3 curve,
/// little-endian.
pub fn octic() -> Vec<i64> {
    let a = [-1i64, 1, 1];
    let b = [-1i64, -5, 0, -9, 0, -5, 1];
    let mut out = vec![0i64; 9];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Cusp coordinates as polynomials in `eta` (little-endian), `(u, v, w)`.
pub fn cusp_zero() -> [Vec<i64>; 3] {
    [vec![7, 21, -4], vec![0, 7, -1], vec![14]]
}

pub fn cusp_infinity() -> [Vec<i64>; 3] {
    [vec![-7, -21, 4], vec![0, -7, 1], vec![14]]
}

/// Long Weierstrass coefficients `[a1, a2, a3, a4, a6]`.
pub const CURVE_15A1: [i64; 5] = [1, 1, 1, -10, -10];
pub const CURVE_15A3: [i64; 5] = [1, 1, 1, -5, 2];

pub fn form_mod<F: Field>(f: &F, terms: &[([u32; 3], i64)]) -> Form<F> {
    let d = terms[0].0.iter().sum();
    Form::from_terms(f, d, terms)
}

/// Stated nodes of the sextic over `Q(sqrt d)`: `(d, [u, v, w])` with each
/// coordinate `[a, b, den]` meaning `(a + b sqrt d) / den`.
pub const SEXTIC_NODES: [(i64, [[i64; 3]; 3]); 4] = [
    (-1, [[0, 1, 1], [0, 0, 1], [1, 0, 1]]),
    (-1, [[0, -1, 1], [0, 0, 1], [1, 0, 1]]),
    (5, [[0, 0, 1], [0, 1, 5], [1, 0, 1]]),
    (5, [[0, 0, 1], [0, -1, 5], [1, 0, 1]]),
];
