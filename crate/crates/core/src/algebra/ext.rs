//! Simple algebraic extensions `K = F[t]/(m(t))`.
//!
//! Over a finite field this gives `F_{q^k}` (and towers of them); over the
//! rationals it is a number field. Construction does not insist on
//! irreducibility: with a reducible modulus the quotient is a product of
//! fields and `inv` returns `None` on zero divisors. Code that wants to split
//! on such failures (dynamic evaluation) relies on this. [`Fq::new`] and
//! [`Fq::canonical`] do check irreducibility.

use std::fmt;
use std::sync::Arc;

use crate::algebra::factor;
use crate::algebra::field::{FiniteField, Field};
use crate::algebra::poly::{self, Poly};
use crate::algebra::prime::PrimeField;
use crate::algebra::rational::Rationals;
use crate::error::{Error, Result};

struct ExtInner<F: Field> {
    base: F,
    modulus: Poly<F>,
    /// `(t^p)^i` for `i < k`; only for finite base fields.
    frob: Option<Vec<Vec<F::Elem>>>,
}

#[derive(Clone)]
pub struct ExtField<F: Field> {
    inner: Arc<ExtInner<F>>,
}

pub type Fq = ExtField<PrimeField>;
pub type NumberField = ExtField<Rationals>;

impl<F: Field> fmt::Debug for ExtField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtField")
            .field("base", &self.inner.base)
            .field("modulus", &self.inner.modulus)
            .finish()
    }
}

impl<F: Field> ExtField<F> {
    /// Quotient by `modulus` (made monic), degree >= 1.
    pub fn new_unchecked(base: F, modulus: Poly<F>) -> Self {
        let modulus = poly::monic(&base, &poly::trimmed(&base, modulus));
        assert!(modulus.len() >= 2, "extension modulus must have degree >= 1");
        ExtField { inner: Arc::new(ExtInner { base, modulus, frob: None }) }
    }

    pub fn base(&self) -> &F {
        &self.inner.base
    }

    pub fn modulus(&self) -> &Poly<F> {
        &self.inner.modulus
    }

    pub fn ext_degree(&self) -> usize {
        self.inner.modulus.len() - 1
    }

    pub fn from_base(&self, c: &F::Elem) -> Vec<F::Elem> {
        let mut v = vec![self.inner.base.zero(); self.ext_degree()];
        v[0] = c.clone();
        v
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<F::Elem> {
        self.from_poly(&poly::x(&self.inner.base))
    }

    /// Reduce a polynomial representative.
    pub fn from_poly(&self, a: &[F::Elem]) -> Vec<F::Elem> {
        let r = poly::rem(&self.inner.base, a, &self.inner.modulus);
        self.pad(r)
    }

    pub fn to_poly(&self, a: &[F::Elem]) -> Poly<F> {
        poly::trimmed(&self.inner.base, a.to_vec())
    }

    /// `Some(c)` if the element lies in the base field.
    pub fn as_base(&self, a: &[F::Elem]) -> Option<F::Elem> {
        let b = &self.inner.base;
        if a[1..].iter().all(|c| b.is_zero(c)) {
            Some(a[0].clone())
        } else {
            None
        }
    }

    fn pad(&self, mut r: Poly<F>) -> Vec<F::Elem> {
        r.resize(self.ext_degree(), self.inner.base.zero());
        r
    }
}

impl<F: FiniteField> ExtField<F> {
    /// Extension of a finite field with a cached Frobenius table. The modulus
    /// is trusted to be irreducible.
    pub fn finite(base: F, modulus: Poly<F>) -> Self {
        let plain = Self::new_unchecked(base.clone(), modulus);
        let k = plain.ext_degree();
        let tp = plain.pow(&plain.generator(), base.prime());
        let mut images = Vec::with_capacity(k);
        let mut cur = plain.one();
        for _ in 0..k {
            images.push(cur.clone());
            cur = plain.mul(&cur, &tp);
        }
        ExtField {
            inner: Arc::new(ExtInner {
                base,
                modulus: plain.inner.modulus.clone(),
                frob: Some(images),
            }),
        }
    }

    /// Like [`ExtField::finite`] but verifies irreducibility.
    pub fn finite_checked(base: F, modulus: Poly<F>) -> Result<Self> {
        let m = poly::trimmed(&base, modulus);
        if m.len() < 2 || !factor::is_irreducible(&base, &m) {
            return Err(Error::InvalidInput("extension modulus is not irreducible".into()));
        }
        Ok(Self::finite(base, m))
    }

    /// A square root if one exists (odd characteristic).
    pub fn sqrt(&self, a: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let a = a.to_vec();
        if self.is_zero(&a) {
            return Some(self.zero());
        }
        factor::roots(self, &[self.neg(&a), self.zero(), self.one()]).into_iter().next()
    }
}

impl Fq {
    /// `F_p[t]/(m)` with `m` verified irreducible over `F_p`.
    pub fn new(p: u64, modulus: &[u64]) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        let m: Poly<PrimeField> = poly::trimmed(&fp, modulus.iter().map(|c| c % p).collect());
        Self::finite_checked(fp, m).map_err(|_| {
            Error::InvalidInput(format!("modulus {modulus:?} is not irreducible over F_{p}"))
        })
    }

    /// The fixed model of `F_{p^k}`: the first monic irreducible
    /// `t^k + a_{k-1} t^{k-1} + ... + a_0` in the order of the integer
    /// `a_0 + a_1 p + ... + a_{k-1} p^{k-1}`. For `p = 3` this gives
    /// `t^2 + 1` and `t^3 + 2t + 1`.
    pub fn canonical(p: u64, k: usize) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        if k == 0 {
            return Err(Error::InvalidInput("extension degree 0".into()));
        }
        let mut idx: u128 = 0;
        loop {
            let mut m = Vec::with_capacity(k + 1);
            let mut n = idx;
            for _ in 0..k {
                m.push((n % p as u128) as u64);
                n /= p as u128;
            }
            m.push(1);
            if (m[0] != 0 || k == 1) && factor::is_irreducible(&fp, &m) {
                return Ok(Self::finite(fp, m));
            }
            idx += 1;
        }
    }

    pub fn prime_field(&self) -> PrimeField {
        self.inner.base
    }
}

impl<F: Field> Field for ExtField<F> {
    type Elem = Vec<F::Elem>;

    fn zero(&self) -> Self::Elem {
        vec![self.inner.base.zero(); self.ext_degree()]
    }
    fn one(&self) -> Self::Elem {
        self.from_base(&self.inner.base.one())
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.iter().all(|c| self.inner.base.is_zero(c))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.inner.base.add(x, y)).collect()
    }
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.inner.base.sub(x, y)).collect()
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.inner.base.neg(x)).collect()
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let base = &self.inner.base;
        let k = self.ext_degree();
        if k == 1 {
            return vec![base.mul(&a[0], &b[0])];
        }
        let mut prod = vec![base.zero(); 2 * k - 1];
        for (i, x) in a.iter().enumerate() {
            if base.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if base.is_zero(y) {
                    continue;
                }
                let t = base.mul(x, y);
                prod[i + j] = base.add(&prod[i + j], &t);
            }
        }
        let m = &self.inner.modulus;
        for i in (k..prod.len()).rev() {
            if base.is_zero(&prod[i]) {
                continue;
            }
            let c = prod[i].clone();
            for j in 0..k {
                let t = base.mul(&c, &m[j]);
                prod[i - k + j] = base.sub(&prod[i - k + j], &t);
            }
        }
        prod.truncate(k);
        prod
    }
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        let base = &self.inner.base;
        if self.ext_degree() == 1 {
            return base.inv(&a[0]).map(|x| vec![x]);
        }
        let ap = poly::trimmed(base, a.clone());
        if ap.is_empty() {
            return None;
        }
        poly::inv_mod(base, &ap, &self.inner.modulus).map(|r| self.pad(r))
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_base(&self.inner.base.from_i64(n))
    }
    fn characteristic(&self) -> u64 {
        self.inner.base.characteristic()
    }
}

impl<F: FiniteField> FiniteField for ExtField<F> {
    fn prime(&self) -> u64 {
        self.inner.base.prime()
    }
    fn degree(&self) -> usize {
        self.ext_degree() * self.inner.base.degree()
    }
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        let b = &self.inner.base;
        match &self.inner.frob {
            None => self.pow(a, self.prime()),
            Some(images) => {
                let mut out = self.zero();
                for (ai, img) in a.iter().zip(images) {
                    if b.is_zero(ai) {
                        continue;
                    }
                    let s = b.frobenius(ai);
                    for (o, c) in out.iter_mut().zip(img) {
                        *o = b.add(o, &b.mul(&s, c));
                    }
                }
                out
            }
        }
    }
    fn coords(&self, a: &Self::Elem) -> Vec<u64> {
        a.iter().flat_map(|c| self.inner.base.coords(c)).collect()
    }
    fn from_coords(&self, c: &[u64]) -> Self::Elem {
        let d = self.inner.base.degree();
        let mut out = self.zero();
        for (i, slot) in out.iter_mut().enumerate() {
            let lo = (i * d).min(c.len());
            let hi = ((i + 1) * d).min(c.len());
            *slot = self.inner.base.from_coords(&c[lo..hi]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_small_fields() {
        let f9 = Fq::canonical(3, 2).unwrap();
        assert_eq!(f9.modulus(), &vec![1, 0, 1]);
        let f27 = Fq::canonical(3, 3).unwrap();
        assert_eq!(f27.modulus(), &vec![1, 2, 0, 1]);
    }

    #[test]
    fn frobenius_matches_power() {
        let f = Fq::canonical(17, 3).unwrap();
        for idx in [5u64, 77, 1234, 4000] {
            let a = f.element(idx);
            assert_eq!(f.frobenius(&a), f.pow(&a, 17));
        }
    }

    #[test]
    fn tower_frobenius_and_coords() {
        let f9 = Fq::canonical(3, 2).unwrap();
        // y^3 - y - 1 is irreducible over F_3 and stays so over F_9
        let m = vec![f9.from_i64(-1), f9.from_i64(-1), f9.zero(), f9.one()];
        let t = ExtField::finite_checked(f9, m).unwrap();
        assert_eq!(t.degree(), 6);
        for idx in [1u64, 100, 500, 728] {
            let a = t.element(idx);
            assert_eq!(t.index_of(&a), idx);
            assert_eq!(t.frobenius(&a), t.pow(&a, 3));
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        assert!(Fq::new(3, &[0, 1, 0, 1]).is_err());
        assert!(Fq::new(3, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn zero_divisor_reports_none() {
        let fp = PrimeField::new(5).unwrap();
        // F_5[t]/(t^2 - 1) is not a field; t - 1 is a zero divisor
        let r = ExtField::new_unchecked(fp, vec![4, 0, 1]);
        assert_eq!(r.inv(&vec![4, 1]), None);
        assert!(r.inv(&vec![2, 1]).is_some());
    }
}
