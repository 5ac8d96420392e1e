//! Rational roots and small-degree factorization over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::integer::{divisors, exact_sqrt, factor_bigint};
use crate::algebra::poly::{self, Poly};
use crate::algebra::rational::Rationals;

const TRIAL_LIMIT: u64 = 1 << 20;

/// Square root in Q, if one exists.
pub fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    let n = exact_sqrt(x.numer())?;
    let d = exact_sqrt(x.denom())?;
    Some(BigRational::new(n, d))
}

/// Integer polynomial with the same roots (denominators cleared, content removed).
pub fn primitive_part(f: &[BigRational]) -> Vec<BigInt> {
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.iter().map(|c| c / &g).collect()
}

/// Distinct rational roots, ascending. `None` if a coefficient was too hard to factor.
pub fn rational_roots(f: &[BigRational]) -> Option<Vec<BigRational>> {
    let q = Rationals;
    let f = poly::trimmed(&q, f.to_vec());
    if f.len() < 2 {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    // strip the root 0
    let lead_zero = f.iter().take_while(|c| c.is_zero()).count();
    if lead_zero > 0 {
        out.push(BigRational::zero());
    }
    let g = primitive_part(&f[lead_zero..]);
    if g.len() >= 2 {
        let a0 = divisors(&factor_bigint(&g[0], TRIAL_LIMIT)?);
        let an = divisors(&factor_bigint(g.last().unwrap(), TRIAL_LIMIT)?);
        for num in &a0 {
            for den in &an {
                if num.gcd(den) != BigInt::one() {
                    continue;
                }
                for s in [num.clone(), -num.clone()] {
                    let r = BigRational::new(s, den.clone());
                    if poly::eval(&q, &f, &r).is_zero() {
                        out.push(r);
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Some(out)
}

/// Monic irreducible factors with multiplicity for polynomials whose
/// non-linear part has degree at most 3.
pub fn factor_small(f: &[BigRational]) -> Option<Vec<(Poly<Rationals>, usize)>> {
    let q = Rationals;
    let mut rest = poly::monic(&q, &poly::trimmed(&q, f.to_vec()));
    let mut out = Vec::new();
    for r in rational_roots(&rest)? {
        let lin = vec![-r.clone(), BigRational::one()];
        let e = poly::root_multiplicity(&q, &rest, &r);
        rest = poly::div_exact(&q, &rest, &poly::pow(&q, &lin, e as u32));
        out.push((lin, e));
    }
    match rest.len() {
        0 | 1 => {}
        3 | 4 => out.push((rest, 1)),
        _ => return None,
    }
    Some(out)
}

/// `true` for a cubic (or quadratic) over Q without rational roots.
pub fn is_irreducible_small(f: &[BigRational]) -> Option<bool> {
    let d = poly::deg_i(f);
    if !(1..=3).contains(&d) {
        return None;
    }
    Some(d == 1 || rational_roots(f)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat, ratio};

    #[test]
    fn roots_of_product() {
        // (2x - 1)(x + 3)(x^2 + 1)
        let q = Rationals;
        let a = poly::mul(&q, &[rat(-1), rat(2)], &[rat(3), rat(1)]);
        let f = poly::mul(&q, &a, &[rat(1), rat(0), rat(1)]);
        assert_eq!(rational_roots(&f).unwrap(), vec![rat(-3), ratio(1, 2)]);
        let fac = factor_small(&f).unwrap();
        assert_eq!(fac.len(), 3);
        assert_eq!(fac[2].0, vec![rat(1), rat(0), rat(1)]);
    }

    #[test]
    fn cubic_irreducibility() {
        assert_eq!(is_irreducible_small(&[rat(-2), rat(0), rat(0), rat(1)]), Some(true));
        assert_eq!(is_irreducible_small(&[rat(-8), rat(0), rat(0), rat(1)]), Some(false));
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&ratio(2, 1)), None);
    }
}
