//! Dense univariate polynomials over any [`Field`].
//!
//! A polynomial is a little-endian coefficient vector with no trailing zeros;
//! the zero polynomial is the empty vector. Functions take the coefficient
//! field explicitly.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::algebra::field::Field;

pub type Poly<F> = Vec<<F as Field>::Elem>;

pub fn trim<F: Field>(f: &F, a: &mut Poly<F>) {
    while let Some(c) = a.last() {
        if f.is_zero(c) {
            a.pop();
        } else {
            break;
        }
    }
}

pub fn trimmed<F: Field>(f: &F, mut a: Poly<F>) -> Poly<F> {
    trim(f, &mut a);
    a
}

pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

/// Degree with the convention deg 0 = -1.
pub fn deg_i(a: &[impl Sized]) -> i64 {
    a.len() as i64 - 1
}

pub fn constant<F: Field>(f: &F, c: F::Elem) -> Poly<F> {
    trimmed(f, vec![c])
}

pub fn one<F: Field>(f: &F) -> Poly<F> {
    vec![f.one()]
}

pub fn x<F: Field>(f: &F) -> Poly<F> {
    vec![f.zero(), f.one()]
}

pub fn monomial<F: Field>(f: &F, c: F::Elem, n: usize) -> Poly<F> {
    if f.is_zero(&c) {
        return Vec::new();
    }
    let mut v = vec![f.zero(); n + 1];
    v[n] = c;
    v
}

pub fn from_i64s<F: Field>(f: &F, coeffs: &[i64]) -> Poly<F> {
    trimmed(f, coeffs.iter().map(|&c| f.from_i64(c)).collect())
}

pub fn is_one<F: Field>(f: &F, a: &[F::Elem]) -> bool {
    a.len() == 1 && f.is_one(&a[0])
}

pub fn add<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.add(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        });
    }
    trimmed(f, out)
}

pub fn sub<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        out.push(match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => f.sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => f.neg(y),
            (None, None) => unreachable!(),
        });
    }
    trimmed(f, out)
}

pub fn neg<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn scale<F: Field>(f: &F, a: &[F::Elem], c: &F::Elem) -> Poly<F> {
    if f.is_zero(c) {
        return Vec::new();
    }
    trimmed(f, a.iter().map(|x| f.mul(x, c)).collect())
}

pub fn mul<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    trimmed(f, out)
}

pub fn shift<F: Field>(f: &F, a: &[F::Elem], n: usize) -> Poly<F> {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); n];
    out.extend_from_slice(a);
    out
}

pub fn pow<F: Field>(f: &F, a: &[F::Elem], e: u32) -> Poly<F> {
    let mut acc = one(f);
    for _ in 0..e {
        acc = mul(f, &acc, a);
    }
    acc
}

/// Division with remainder. Fails (returning the offending leading
/// coefficient) when `lc(b)` is not invertible, which only happens over rings
/// that are not fields.
pub fn try_divrem<F: Field>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> Result<(Poly<F>, Poly<F>), F::Elem> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    let lc = b.last().unwrap();
    let lc_inv = f.inv(lc).ok_or_else(|| lc.clone())?;
    let mut r: Poly<F> = a.to_vec();
    if r.len() < b.len() {
        return Ok((Vec::new(), r));
    }
    let db = b.len() - 1;
    let mut q = vec![f.zero(); r.len() - db];
    for i in (db..r.len()).rev() {
        let c = f.mul(&r[i], &lc_inv);
        if f.is_zero(&c) {
            continue;
        }
        let k = i - db;
        for (j, bj) in b.iter().enumerate() {
            let t = f.mul(&c, bj);
            r[k + j] = f.sub(&r[k + j], &t);
        }
        q[k] = c;
    }
    r.truncate(db);
    Ok((trimmed(f, q), trimmed(f, r)))
}

pub fn divrem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>) {
    try_divrem(f, a, b).expect("leading coefficient not invertible")
}

pub fn rem<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    divrem(f, a, b).1
}

/// Exact quotient; panics if `b` does not divide `a`.
pub fn div_exact<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let (q, r) = divrem(f, a, b);
    assert!(r.is_empty(), "inexact polynomial division");
    q
}

pub fn try_monic<F: Field>(f: &F, a: &[F::Elem]) -> Result<Poly<F>, F::Elem> {
    match a.last() {
        None => Ok(Vec::new()),
        Some(lc) => {
            let inv = f.inv(lc).ok_or_else(|| lc.clone())?;
            Ok(scale(f, a, &inv))
        }
    }
}

pub fn monic<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F> {
    try_monic(f, a).expect("leading coefficient not invertible")
}

/// Monic gcd (gcd(0, 0) = 0). Over a product of fields this reports the
/// zero divisor that blocked the Euclidean algorithm.
pub fn try_gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Result<Poly<F>, F::Elem> {
    let mut r0 = a.to_vec();
    let mut r1 = b.to_vec();
    while !r1.is_empty() {
        let (_, r) = try_divrem(f, &r0, &r1)?;
        r0 = std::mem::replace(&mut r1, r);
    }
    try_monic(f, &r0)
}

pub fn gcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    try_gcd(f, a, b).expect("leading coefficient not invertible")
}

/// Extended gcd: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub fn xgcd<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> (Poly<F>, Poly<F>, Poly<F>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (one(f), Vec::new());
    let (mut t0, mut t1) = (Vec::new(), one(f));
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        let t = sub(f, &t0, &mul(f, &q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    match r0.last().cloned() {
        None => (r0, s0, t0),
        Some(lc) => {
            let inv = f.inv(&lc).expect("field element");
            (scale(f, &r0, &inv), scale(f, &s0, &inv), scale(f, &t0, &inv))
        }
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod<F: Field>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Option<Poly<F>> {
    let (g, s, _) = xgcd(f, &rem(f, a, m), m);
    if is_one(f, &g) {
        Some(rem(f, &s, m))
    } else {
        None
    }
}

pub fn eval<F: Field>(f: &F, a: &[F::Elem], at: &F::Elem) -> F::Elem {
    let mut acc = f.zero();
    for c in a.iter().rev() {
        acc = f.add(&f.mul(&acc, at), c);
    }
    acc
}

pub fn derivative<F: Field>(f: &F, a: &[F::Elem]) -> Poly<F> {
    let out: Poly<F> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
        .collect();
    trimmed(f, out)
}

pub fn mulmod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Poly<F> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: Field>(f: &F, a: &[F::Elem], e: &BigUint, m: &[F::Elem]) -> Poly<F> {
    let base = rem(f, a, m);
    let mut acc = rem(f, &one(f), m);
    if e.is_zero() {
        return acc;
    }
    for i in (0..e.bits()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if e.bit(i) {
            acc = mulmod(f, &acc, &base, m);
        }
    }
    acc
}

pub fn powmod_u64<F: Field>(f: &F, a: &[F::Elem], e: u64, m: &[F::Elem]) -> Poly<F> {
    powmod(f, a, &BigUint::from(e), m)
}

/// `a(b)` by Horner.
pub fn compose<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F> {
    let mut acc: Poly<F> = Vec::new();
    for c in a.iter().rev() {
        acc = add(f, &mul(f, &acc, b), &constant(f, c.clone()));
    }
    acc
}

/// `a(b) mod m` by Horner.
pub fn compose_mod<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem], m: &[F::Elem]) -> Poly<F> {
    let mut acc: Poly<F> = Vec::new();
    for c in a.iter().rev() {
        acc = add(f, &mulmod(f, &acc, b, m), &constant(f, c.clone()));
    }
    acc
}

/// Map coefficients into another field.
pub fn map<F: Field, G: Field>(g: &G, a: &[F::Elem], phi: impl Fn(&F::Elem) -> G::Elem) -> Poly<G> {
    trimmed(g, a.iter().map(phi).collect())
}

/// Reverse the coefficient list of `a` viewed as a polynomial of degree `n`.
pub fn reverse<F: Field>(f: &F, a: &[F::Elem], n: usize) -> Poly<F> {
    let mut out = vec![f.zero(); n + 1];
    for (i, c) in a.iter().enumerate() {
        out[n - i] = c.clone();
    }
    trimmed(f, out)
}

/// Multiplicity of the root `r` of `a` (`a` nonzero).
pub fn root_multiplicity<F: Field>(f: &F, a: &[F::Elem], r: &F::Elem) -> usize {
    let lin = vec![f.neg(r), f.one()];
    let mut cur = a.to_vec();
    let mut m = 0;
    loop {
        let (q, rr) = divrem(f, &cur, &lin);
        if !rr.is_empty() || cur.is_empty() {
            return m;
        }
        m += 1;
        cur = q;
    }
}

/// Resultant of two univariate polynomials over a field (Euclidean
/// algorithm with the standard sign/leading-coefficient bookkeeping).
pub fn resultant<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    if a.is_empty() || b.is_empty() {
        return f.zero();
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    let mut acc = f.one();
    loop {
        let da = a.len() - 1;
        let db = b.len() - 1;
        if db == 0 {
            return f.mul(&acc, &f.pow(&b[0], da as u64));
        }
        let (_, r) = divrem(f, &a, &b);
        if r.is_empty() {
            return f.zero();
        }
        let dr = r.len() - 1;
        // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
        let mut factor = f.pow(b.last().unwrap(), (da - dr) as u64);
        if (da * db) % 2 == 1 {
            factor = f.neg(&factor);
        }
        acc = f.mul(&acc, &factor);
        a = b;
        b = r;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::prime::PrimeField;
    use crate::algebra::rational::{rat, Rationals};

    #[test]
    fn gcd_examples() {
        let f3 = PrimeField::new(3).unwrap();
        let a = from_i64s(&f3, &[1, 0, 1]);
        let b = from_i64s(&f3, &[0, 1, 0, 1]);
        assert_eq!(gcd(&f3, &a, &b), a);
        // gcd(f, 0) = monic(f)
        let g = from_i64s(&f3, &[1, 2, 2]);
        assert_eq!(gcd(&f3, &g, &[]), monic(&f3, &g));
        assert!(gcd(&f3, &[], &[]).is_empty());
        let q = Rationals;
        let l1 = from_i64s(&q, &[-1, 1]);
        let l2 = from_i64s(&q, &[-2, 1]);
        assert_eq!(gcd(&q, &l1, &l2), vec![rat(1)]);
    }

    #[test]
    fn divrem_reconstructs() {
        let q = Rationals;
        let a = from_i64s(&q, &[3, -1, 4, 1, -5, 9]);
        let b = from_i64s(&q, &[2, 6, -5]);
        let (qq, r) = divrem(&q, &a, &b);
        assert!(r.len() < b.len());
        assert_eq!(add(&q, &mul(&q, &qq, &b), &r), a);
    }

    #[test]
    fn resultant_of_linear_factors() {
        let q = Rationals;
        // res(x - 1, x - 3) = (1 - 3) = -2
        let a = from_i64s(&q, &[-1, 1]);
        let b = from_i64s(&q, &[-3, 1]);
        assert_eq!(resultant(&q, &a, &b), rat(-2));
        // res(x^2 + 1, x^2 - 5) = prod over roots of x^2+1 of (r^2 - 5) = 36
        let c = from_i64s(&q, &[1, 0, 1]);
        let d = from_i64s(&q, &[-5, 0, 1]);
        assert_eq!(resultant(&q, &c, &d), rat(36));
    }
}
