//! Small integer utilities: trial-division factoring and divisors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Prime factorization of `n > 0` by trial division.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n > 0);
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Factorization of `|n|` (nonzero) by trial division. Fails if a cofactor
/// survives division by everything below `limit` and is not provably prime.
pub fn factor_bigint(n: &BigInt, limit: u64) -> Option<Vec<(BigInt, u32)>> {
    assert!(!n.is_zero());
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while d <= limit {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        if (&n % &bd).is_zero() {
            let mut e = 0;
            while (&n % &bd).is_zero() {
                n /= &bd;
                e += 1;
            }
            out.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n.is_one() {
        return Some(out);
    }
    let bl = BigInt::from(limit);
    if n <= &bl * &bl || BigInt::from(d) * BigInt::from(d) > n {
        out.push((n, 1));
        Some(out)
    } else {
        None
    }
}

/// All positive divisors from a factorization, ascending.
pub fn divisors(fac: &[(BigInt, u32)]) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in fac {
        let mut next = Vec::with_capacity(out.len() * (*e as usize + 1));
        for d in &out {
            let mut pk = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Exact integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `n` as `i64` when it fits.
pub fn to_i64(n: &BigInt) -> Option<i64> {
    n.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_group_orders() {
        assert_eq!(factor_u64(1127), vec![(7, 2), (23, 1)]);
        assert_eq!(factor_u64(23_052_344), vec![(2, 3), (7, 3), (31, 1), (271, 1)]);
    }

    #[test]
    fn divisors_of_small() {
        let f = factor_bigint(&BigInt::from(-12), 100).unwrap();
        let d: Vec<i64> = divisors(&f).iter().map(|x| to_i64(x).unwrap()).collect();
        assert_eq!(d, vec![1, 2, 3, 4, 6, 12]);
    }
}
