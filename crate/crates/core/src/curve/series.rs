//! Truncated power series in one variable `t` and Newton lifting of
//! simple roots of `H(t, z) = 0`.

use crate::algebra::field::Field;

/// Coefficients `s_0, s_1, ...` of `sum s_i t^i`, kept to a fixed length.
pub type Series<F> = Vec<<F as Field>::Elem>;

pub fn truncate<F: Field>(f: &F, mut a: Series<F>, n: usize) -> Series<F> {
    a.resize(n, f.zero());
    a
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Series<F> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) | (None, Some(x)) => x.clone(),
            (None, None) => unreachable!(),
        })
        .collect()
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Series<F> {
    let nb: Vec<_> = b.iter().map(|x| f.neg(x)).collect();
    add(f, a, &nb)
}

/// Product modulo `t^n`.
pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], n: usize) -> Series<F> {
    let mut out = vec![f.zero(); n];
    for (i, x) in a.iter().enumerate().take(n) {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

/// Inverse modulo `t^n`; `None` when the constant term is zero.
pub fn inv<F: Field>(f: &F, a: &[F::Elem], n: usize) -> Option<Series<F>> {
    let c0 = f.inv(a.first()?)?;
    let mut out = vec![f.zero(); n];
    if n == 0 {
        return Some(out);
    }
    out[0] = c0.clone();
    for k in 1..n {
        let mut s = f.zero();
        for j in 1..=k.min(a.len() - 1) {
            s = f.add(&s, &f.mul(&a[j], &out[k - j]));
        }
        out[k] = f.neg(&f.mul(&s, &c0));
    }
    Some(out)
}

/// Index of the first nonzero coefficient.
pub fn valuation<F: Field>(f: &F, a: &[F::Elem]) -> Option<usize> {
    a.iter().position(|x| !f.is_zero(x))
}

/// `H = sum_{k, j} h[j][k] t^k z^j`, evaluated at a series `z(t)` mod `t^n`.
pub fn eval_bivariate<F: Field>(f: &F, h: &[Vec<F::Elem>], z: &[F::Elem], n: usize) -> Series<F> {
    let mut acc = vec![f.zero(); n];
    for coeff in h.iter().rev() {
        acc = mul(f, &acc, z, n);
        acc = add(f, &acc, &truncate(f, coeff.clone(), n));
    }
    acc
}

/// Partial derivative in `z` of a bivariate `H` stored as in [`eval_bivariate`].
pub fn d_z<F: Field>(f: &F, h: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    h.iter()
        .enumerate()
        .skip(1)
        .map(|(j, c)| {
            let m = f.from_i64(j as i64);
            c.iter().map(|x| f.mul(x, &m)).collect()
        })
        .collect()
}

/// Lift the simple root `z0` of `H(0, z)` to `z(t)` with `H(t, z(t)) = 0 mod t^n`.
///
/// Returns `None` when `z0` is not a simple root.
pub fn newton_lift<F: Field>(f: &F, h: &[Vec<F::Elem>], z0: &F::Elem, n: usize) -> Option<Series<F>> {
    let dh = d_z(f, h);
    let mut z = vec![z0.clone()];
    let h0 = eval_bivariate(f, h, &z, 1);
    if !f.is_zero(&h0[0]) {
        return None;
    }
    let mut prec = 1;
    while prec < n {
        prec = (2 * prec).min(n);
        z = truncate(f, z, prec);
        let num = eval_bivariate(f, h, &z, prec);
        let den = eval_bivariate(f, &dh, &z, prec);
        let step = mul(f, &num, &inv(f, &den, prec)?, prec);
        z = sub(f, &z, &step);
    }
    Some(truncate(f, z, n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, Rationals};

    #[test]
    fn sqrt_of_one_plus_t() {
        // z^2 - (1 + t) = 0, z(0) = 1
        let q = Rationals;
        let h = vec![vec![rat(-1), rat(-1)], vec![], vec![rat(1)]];
        let z = newton_lift(&q, &h, &rat(1), 6).unwrap();
        let z2 = mul(&q, &z, &z, 6);
        assert_eq!(z2, truncate(&q, vec![rat(1), rat(1)], 6));
        assert_eq!(z[2], num_rational::BigRational::new((-1).into(), 8.into()));
    }

    #[test]
    fn inverse_round_trip() {
        let q = Rationals;
        let a = vec![rat(2), rat(3), rat(-1)];
        let b = inv(&q, &a, 7).unwrap();
        let one = mul(&q, &a, &b, 7);
        assert_eq!(one, truncate(&q, vec![rat(1)], 7));
        assert!(inv(&q, &[rat(0), rat(1)], 3).is_none());
    }
}
