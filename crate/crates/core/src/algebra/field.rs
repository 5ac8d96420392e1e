//! Field abstraction shared by every exact computation in the crate.
//!
//! Fields are values (they carry moduli, defining polynomials and cached
//! tables) and elements are plain data owned by the caller. All arithmetic
//! goes through the field object, in the style of `ring.mul(&a, &b)`.

use std::fmt::Debug;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub trait Field: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` for zero (and for zero divisors when the "field" is really a
    /// product of fields, which the splitting code relies on).
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    /// Zero for fields of characteristic zero.
    fn characteristic(&self) -> u64;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// Kernel basis of the matrix `rows` with `ncols` columns, in the
    /// canonical reduced-echelon normalization.
    fn kernel(&self, rows: Vec<Vec<Self::Elem>>, ncols: usize) -> Vec<Vec<Self::Elem>> {
        crate::algebra::linalg::kernel_gauss(self, rows, ncols)
    }

    fn pow_big(&self, a: &Self::Elem, e: &BigUint) -> Self::Elem {
        if e.is_zero() {
            return self.one();
        }
        let mut acc = self.one();
        for i in (0..e.bits()).rev() {
            acc = self.square(&acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }
}

/// Finite fields: prime fields and their extensions.
pub trait FiniteField: Field {
    /// The characteristic `p`.
    fn prime(&self) -> u64;
    /// Degree over the prime field.
    fn degree(&self) -> usize;
    fn order(&self) -> BigUint {
        BigUint::from(self.prime()).pow(self.degree() as u32)
    }
    /// Order as a machine integer, when it fits.
    fn order_u64(&self) -> Option<u64> {
        (self.prime() as u128)
            .checked_pow(self.degree() as u32)
            .and_then(|q| u64::try_from(q).ok())
    }
    /// The absolute Frobenius `a -> a^p`.
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem;
    /// Coordinates over the prime field (power basis).
    fn coords(&self, a: &Self::Elem) -> Vec<u64>;
    fn from_coords(&self, c: &[u64]) -> Self::Elem;

    /// Enumeration: the element with base-`p` digits `idx`.
    fn element(&self, mut idx: u64) -> Self::Elem {
        let p = self.prime();
        let mut c = vec![0u64; self.degree()];
        for slot in c.iter_mut() {
            *slot = idx % p;
            idx /= p;
        }
        self.from_coords(&c)
    }

    fn index_of(&self, a: &Self::Elem) -> u64 {
        let p = self.prime();
        self.coords(a).iter().rev().fold(0u64, |acc, &d| acc * p + d)
    }

    /// Quadratic character for odd characteristic: 0, 1 or -1.
    fn legendre(&self, a: &Self::Elem) -> i32 {
        if self.is_zero(a) {
            return 0;
        }
        let e = (self.order() - BigUint::one()) >> 1;
        if self.is_one(&self.pow_big(a, &e)) {
            1
        } else {
            -1
        }
    }
}
