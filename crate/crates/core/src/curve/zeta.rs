//! L-polynomials of curves over `F_q` from point counts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::poly;
use crate::algebra::rational::Rationals;
use crate::algebra::sturm;
use crate::error::{Error, Result};

/// `L(T) = sum a_i T^i` with `a_0 = 1`, `a_{2g} = q^g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    pub q: u64,
    pub genus: usize,
    pub coeffs: Vec<BigInt>,
}

impl LPolynomial {
    /// Newton identities on `N_1..N_g`, completed by the functional equation.
    pub fn from_counts(q: u64, genus: usize, counts: &[u64]) -> Result<Self> {
        if counts.len() < genus {
            return Err(Error::InvalidInput(format!("need {genus} point counts, got {}", counts.len())));
        }
        let bq = BigInt::from(q);
        let s: Vec<BigInt> = (1..=genus)
            .map(|k| BigInt::from(counts[k - 1]) - 1 - bq.pow(k as u32))
            .collect();
        let mut a = vec![BigInt::one()];
        for k in 1..=genus {
            let mut acc = BigInt::zero();
            for i in 1..=k {
                acc += &s[i - 1] * &a[k - i];
            }
            let (quo, rem) = acc.div_rem(&BigInt::from(k));
            if !rem.is_zero() {
                return Err(Error::Inconsistent(format!("point counts give a non-integral a_{k}")));
            }
            a.push(quo);
        }
        for i in (0..genus).rev() {
            a.push(&a[i] * bq.pow((genus - i) as u32));
        }
        Ok(LPolynomial { q, genus, coeffs: a })
    }

    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// `N_k` for any `k` from the coefficients (power sums of the inverse roots).
    pub fn count(&self, k: usize) -> BigInt {
        // power sums p_j of the inverse roots, via Newton on L(T) = prod(1 - a T)
        let a = &self.coeffs;
        let mut p: Vec<BigInt> = Vec::with_capacity(k + 1);
        p.push(BigInt::zero());
        for j in 1..=k {
            let mut acc = -BigInt::from(j as u64) * a.get(j).cloned().unwrap_or_default();
            for i in 1..j {
                acc -= a.get(i).cloned().unwrap_or_default() * &p[j - i];
            }
            p.push(acc);
        }
        BigInt::one() + BigInt::from(self.q).pow(k as u32) - &p[k]
    }

    /// `a_i = q^{i-g} a_{2g-i}` for all `i`.
    pub fn functional_equation_holds(&self) -> bool {
        let g = self.genus;
        let q = BigInt::from(self.q);
        self.coeffs.len() == 2 * g + 1 && (0..g).all(|i| self.coeffs[2 * g - i] == &self.coeffs[i] * q.pow((g - i) as u32))
    }

    /// Real Weil polynomial `h` with `T^{2g} L(1/T) = T^g h(T + q/T)`.
    pub fn real_weil_polynomial(&self) -> Vec<BigInt> {
        let g = self.genus;
        let q = BigInt::from(self.q);
        // reversed coefficients p_{2g-i} = a_i; p_{g+k} = a_{g-k}
        let pk = |k: usize| self.coeffs[g - k].clone();
        let mut h = vec![pk(0)];
        let mut d_prev: Vec<BigInt> = vec![BigInt::from(2)];
        let mut d_cur: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
        for k in 1..=g {
            if h.len() < d_cur.len() {
                h.resize(d_cur.len(), BigInt::zero());
            }
            for (i, c) in d_cur.iter().enumerate() {
                h[i] += &pk(k) * c;
            }
            // D_{k+1} = X D_k - q D_{k-1}
            let mut next = vec![BigInt::zero(); d_cur.len() + 1];
            for (i, c) in d_cur.iter().enumerate() {
                next[i + 1] += c;
            }
            for (i, c) in d_prev.iter().enumerate() {
                next[i] -= &q * c;
            }
            d_prev = std::mem::replace(&mut d_cur, next);
        }
        h
    }

    /// Every inverse root has absolute value `sqrt(q)`: `h` has `g` real roots
    /// (with multiplicity), all with `x^2 <= 4q`.
    pub fn satisfies_weil(&self) -> bool {
        let g = self.genus;
        let h: Vec<BigRational> = self.real_weil_polynomial().into_iter().map(BigRational::from_integer).collect();
        if sturm::real_roots_with_multiplicity(&h) != g {
            return false;
        }
        // y = x^2: h(x) h(-x) = E(y)^2 - y O(y)^2 for h(x) = E(x^2) + x O(x^2)
        let qf = Rationals;
        let even: Vec<BigRational> = h.iter().step_by(2).cloned().collect();
        let odd: Vec<BigRational> = h.iter().skip(1).step_by(2).cloned().collect();
        let sq = poly::sub(&qf, &poly::mul(&qf, &even, &even), &poly::shift(&qf, &poly::mul(&qf, &odd, &odd), 1));
        let bound = BigRational::from_integer(BigInt::from(4 * self.q));
        sturm::real_roots_above(&sq, &bound) == 0
    }

    pub fn coeffs_i64(&self) -> Vec<i64> {
        self.coeffs.iter().map(|c| i64::try_from(c).expect("coefficient fits i64")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_curve_round_trip() {
        // y^2 = x^3 + x + 1 over F_5 has 9 points: a_1 = 9 - 6 = 3
        let l = LPolynomial::from_counts(5, 1, &[9]).unwrap();
        assert_eq!(l.coeffs, vec![BigInt::from(1), BigInt::from(3), BigInt::from(5)]);
        assert_eq!(l.at_one(), BigInt::from(9));
        assert_eq!(l.count(1), BigInt::from(9));
        assert!(l.satisfies_weil());
        assert!(l.functional_equation_holds());
    }

    #[test]
    fn weil_violation_detected() {
        // a_1 = 5 exceeds 2 sqrt(5)
        let l = LPolynomial { q: 5, genus: 1, coeffs: vec![BigInt::from(1), BigInt::from(5), BigInt::from(5)] };
        assert!(!l.satisfies_weil());
    }

    #[test]
    fn integrality_failure_is_reported() {
        // s_1 = 0, s_2 = 1 gives 2 a_2 = 1
        assert!(LPolynomial::from_counts(3, 2, &[4, 11]).is_err());
    }
}
