//! Dense linear algebra over exact fields.
//!
//! Plain Gauss–Jordan elimination for finite fields and a fraction-free
//! (Bareiss) path for rational matrices. Kernel bases are returned in the
//! canonical form read off the reduced row echelon form: one vector per free
//! column, with a 1 in that column and 0 in the other free columns.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::field::Field;

pub type Matrix<F> = Vec<Vec<<F as Field>::Elem>>;

/// In-place reduced row echelon form; returns pivot columns.
pub fn rref<F: Field>(f: &F, m: &mut Matrix<F>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(sel) = (row..m.len()).find(|&r| !f.is_zero(&m[r][col])) else {
            continue;
        };
        m.swap(row, sel);
        let inv = f.inv(&m[row][col]).expect("nonzero pivot in a field");
        for c in col..ncols {
            m[row][c] = f.mul(&m[row][c], &inv);
        }
        for r in 0..m.len() {
            if r == row || f.is_zero(&m[r][col]) {
                continue;
            }
            let factor = m[r][col].clone();
            for c in col..ncols {
                let t = f.mul(&factor, &m[row][c]);
                m[r][c] = f.sub(&m[r][c], &t);
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(pivots.len());
    pivots
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F>, ncols: usize) -> usize {
    let mut work = m.clone();
    rref(f, &mut work, ncols).len()
}

fn kernel_from_rref<F: Field>(f: &F, m: &Matrix<F>, pivots: &[usize], ncols: usize) -> Matrix<F> {
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![f.zero(); ncols];
        v[free] = f.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = f.neg(&m[r][free]);
        }
        basis.push(v);
    }
    basis
}

/// Kernel of `rows` (each of length `ncols`) by Gauss–Jordan.
pub fn kernel_gauss<F: Field>(f: &F, mut rows: Matrix<F>, ncols: usize) -> Matrix<F> {
    let pivots = rref(f, &mut rows, ncols);
    kernel_from_rref(f, &rows, &pivots, ncols)
}

/// Fraction-free row echelon form of an integer matrix (Bareiss). Returns
/// the pivot columns; rows past the rank are removed.
pub fn bareiss_echelon(m: &mut Vec<Vec<BigInt>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        for r in row + 1..m.len() {
            for c in (col + 1)..ncols {
                let v = &m[row][col] * &m[r][c] - &m[r][col] * &m[row][c];
                m[r][c] = v / &prev; // exact by Sylvester's identity
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        pivots.push(col);
        row += 1;
    }
    m.truncate(pivots.len());
    pivots
}

/// Kernel of a rational matrix: denominators are cleared row by row, the
/// integer matrix is brought to echelon form without fractions, and only
/// the final back substitution works in Q.
pub fn kernel_rational(rows: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let mut ints: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    let pivots = bareiss_echelon(&mut ints, ncols);
    // back substitution to reduced form over Q
    let q = crate::algebra::rational::Rationals;
    let mut m: Vec<Vec<BigRational>> = ints
        .into_iter()
        .map(|r| r.into_iter().map(BigRational::from_integer).collect())
        .collect();
    for (i, &pc) in pivots.iter().enumerate().rev() {
        let inv = m[i][pc].recip();
        for c in pc..ncols {
            m[i][c] = &m[i][c] * &inv;
        }
        for r in 0..i {
            if m[r][pc].is_zero() {
                continue;
            }
            let factor = m[r][pc].clone();
            for c in pc..ncols {
                let t = &factor * &m[i][c];
                m[r][c] = &m[r][c] - t;
            }
        }
    }
    kernel_from_rref(&q, &m, &pivots, ncols)
}

/// Determinant over a field.
pub fn det<F: Field>(f: &F, m: &Matrix<F>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut d = f.one();
    for col in 0..n {
        let Some(sel) = (col..n).find(|&r| !f.is_zero(&a[r][col])) else {
            return f.zero();
        };
        if sel != col {
            a.swap(sel, col);
            d = f.neg(&d);
        }
        d = f.mul(&d, &a[col][col]);
        let inv = f.inv(&a[col][col]).expect("nonzero pivot");
        for r in col + 1..n {
            if f.is_zero(&a[r][col]) {
                continue;
            }
            let factor = f.mul(&a[r][col], &inv);
            for c in col..n {
                let t = f.mul(&factor, &a[col][c]);
                a[r][c] = f.sub(&a[r][c], &t);
            }
        }
    }
    d
}

/// Solve `m x = b` for square invertible `m`.
pub fn solve<F: Field>(f: &F, m: &Matrix<F>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let n = m.len();
    let mut aug: Matrix<F> = m
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(f, &mut aug, n + 1);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(aug.iter().map(|r| r[n].clone()).collect())
}

/// `m * v`.
pub fn mat_vec<F: Field>(f: &F, m: &Matrix<F>, v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter()
        .map(|row| {
            row.iter().zip(v).fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
        })
        .collect()
}

pub fn mat_mul<F: Field>(f: &F, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&row[k], &b[k][j]))))
                .collect()
        })
        .collect()
}
