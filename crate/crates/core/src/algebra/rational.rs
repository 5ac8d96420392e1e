use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::field::Field;
use crate::algebra::prime::PrimeField;

/// The field of rational numbers. Elements are always in lowest terms with a
/// positive denominator (`num_rational` normalizes eagerly).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Reduce a rational modulo `p`; `None` if `p` divides the denominator.
pub fn reduce_mod_p(x: &BigRational, fp: &PrimeField) -> Option<u64> {
    let p = BigInt::from(fp.p());
    let den = x.denom().mod_floor_pos(&p);
    if den.is_zero() {
        return None;
    }
    let num = x.numer().mod_floor_pos(&p);
    let n = u64::try_from(num).ok()?;
    let d = u64::try_from(den).ok()?;
    Some(fp.mul(&n, &fp.inv(&d)?))
}

trait ModFloorPos {
    fn mod_floor_pos(&self, m: &BigInt) -> BigInt;
}

impl ModFloorPos for BigInt {
    fn mod_floor_pos(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        rat(n)
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn kernel(&self, rows: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
        crate::algebra::linalg::kernel_rational(rows, ncols)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a = ratio(6, -4);
        assert_eq!(a.numer(), &BigInt::from(-3));
        assert_eq!(a.denom(), &BigInt::from(2));
        assert_eq!(ratio(2, 4), ratio(1, 2));
    }

    #[test]
    fn reduction_mod_p() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(reduce_mod_p(&ratio(1, 14), &f3), Some(2));
        assert_eq!(reduce_mod_p(&ratio(-7, 1), &f3), Some(2));
        assert_eq!(reduce_mod_p(&ratio(1, 3), &f3), None);
    }
}
