//! Polynomials in two variables stored as polynomials in `v` whose
//! coefficients are polynomials in `u`, and the resultant in `v`.

use crate::algebra::field::Field;
use crate::algebra::poly::{self, Poly};

/// `sum_j a_j(u) v^j`, trimmed in `v`.
pub type BiPoly<F> = Vec<Poly<F>>;

pub fn bi_trim<F: Field>(f: &F, a: &mut BiPoly<F>) {
    for c in a.iter_mut() {
        poly::trim(f, c);
    }
    while a.last().is_some_and(|c| c.is_empty()) {
        a.pop();
    }
}

/// Substitute `u = u0` giving a polynomial in `v` over the field of `u0`.
pub fn eval_u<F: Field, G: Field>(
    g: &G,
    a: &BiPoly<F>,
    embed: impl Fn(&F::Elem) -> G::Elem,
    u0: &G::Elem,
) -> Poly<G> {
    let coeffs = a
        .iter()
        .map(|c| {
            let mut acc = g.zero();
            for x in c.iter().rev() {
                acc = g.add(&g.mul(&acc, u0), &embed(x));
            }
            acc
        })
        .collect();
    poly::trimmed(g, coeffs)
}

/// Determinant of a matrix over `F[u]` by fraction-free elimination
/// (every division is exact).
pub fn det_poly<F: Field>(f: &F, m: Vec<Vec<Poly<F>>>) -> Poly<F> {
    let n = m.len();
    let mut a = m;
    let mut prev = poly::one(f);
    let mut sign = false;
    for k in 0..n {
        let Some(sel) = (k..n).find(|&r| !a[r][k].is_empty()) else {
            return Vec::new();
        };
        if sel != k {
            a.swap(sel, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = poly::sub(f, &poly::mul(f, &a[k][k], &a[i][j]), &poly::mul(f, &a[i][k], &a[k][j]));
                a[i][j] = poly::div_exact(f, &t, &prev);
            }
            a[i][k] = Vec::new();
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        poly::neg(f, &d)
    } else {
        d
    }
}

/// `Res_v(a, b)` as a polynomial in `u` (Sylvester determinant).
pub fn resultant_v<F: Field>(f: &F, a: &BiPoly<F>, b: &BiPoly<F>) -> Poly<F> {
    let (Some(m), Some(n)) = (a.len().checked_sub(1), b.len().checked_sub(1)) else {
        return Vec::new();
    };
    if m == 0 && n == 0 {
        return poly::one(f);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Vec::new(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Vec::new(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det_poly(f, rows)
}

/// Partial derivative in `v`.
pub fn d_v<F: Field>(f: &F, a: &BiPoly<F>) -> BiPoly<F> {
    let mut out: BiPoly<F> =
        a.iter().enumerate().skip(1).map(|(j, c)| poly::scale(f, c, &f.from_i64(j as i64))).collect();
    bi_trim(f, &mut out);
    out
}

/// Partial derivative in `u`.
pub fn d_u<F: Field>(f: &F, a: &BiPoly<F>) -> BiPoly<F> {
    let mut out: BiPoly<F> = a.iter().map(|c| poly::derivative(f, c)).collect();
    bi_trim(f, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rationals};

    #[test]
    fn resultant_of_circle_and_line() {
        let q = Rationals;
        // v^2 + u^2 - 1 and v - u: Res_v = 2u^2 - 1 (up to sign)
        let a: BiPoly<Rationals> = vec![vec![rat(-1), rat(0), rat(1)], vec![], vec![rat(1)]];
        let b: BiPoly<Rationals> = vec![vec![rat(0), rat(-1)], vec![rat(1)]];
        let r = resultant_v(&q, &a, &b);
        assert_eq!(r, vec![rat(-1), rat(0), rat(2)]);
    }
}
