//! Real-root counting over Q with Sturm sequences.

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::poly::{self, Poly};
use crate::algebra::rational::Rationals;
use crate::error::{Error, Result};

type QPoly = Poly<Rationals>;

fn sturm_chain(f: &[BigRational]) -> Vec<QPoly> {
    let q = Rationals;
    let mut chain = vec![f.to_vec(), poly::derivative(&q, f)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        let r = poly::rem(&q, &chain[n - 2], &chain[n - 1]);
        if r.is_empty() {
            break;
        }
        chain.push(poly::neg(&q, &r));
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut prev = 0;
    let mut count = 0;
    for s in signs.filter(|s| *s != 0) {
        if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    count
}

fn sign(x: &BigRational) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

fn changes_at(chain: &[QPoly], x: &BigRational) -> usize {
    sign_changes(chain.iter().map(|p| sign(&poly::eval(&Rationals, p, x))))
}

fn changes_at_pos_inf(chain: &[QPoly]) -> usize {
    sign_changes(chain.iter().map(|p| sign(p.last().unwrap())))
}

fn changes_at_neg_inf(chain: &[QPoly]) -> usize {
    sign_changes(chain.iter().map(|p| {
        let s = sign(p.last().unwrap());
        if (p.len() - 1) % 2 == 1 {
            -s
        } else {
            s
        }
    }))
}

fn is_squarefree(f: &[BigRational]) -> bool {
    let q = Rationals;
    poly::gcd(&q, f, &poly::derivative(&q, f)).len() <= 1
}

/// Number of distinct real roots of a squarefree polynomial.
pub fn sturm_real_roots(f: &[BigRational]) -> Result<usize> {
    let f = poly::trimmed(&Rationals, f.to_vec());
    if f.is_empty() {
        return Err(Error::InvalidInput("zero polynomial".into()));
    }
    if !is_squarefree(&f) {
        return Err(Error::InvalidInput("polynomial is not squarefree".into()));
    }
    let chain = sturm_chain(&f);
    Ok(changes_at_neg_inf(&chain) - changes_at_pos_inf(&chain))
}

/// Distinct real roots in the open interval `(a, +inf)`, any input.
pub fn real_roots_above(f: &[BigRational], a: &BigRational) -> usize {
    let f = poly::trimmed(&Rationals, f.to_vec());
    if f.len() <= 1 {
        return 0;
    }
    let chain = sturm_chain(&f);
    // a root exactly at `a` drops out of the sign sequence and is not counted
    changes_at(&chain, a) - changes_at_pos_inf(&chain)
}

/// Number of real roots counted with multiplicity (Yun decomposition over Q,
/// then Sturm on each squarefree layer).
pub fn real_roots_with_multiplicity(f: &[BigRational]) -> usize {
    let q = Rationals;
    let f = poly::trimmed(&q, f.to_vec());
    if f.len() <= 1 {
        return 0;
    }
    let mut total = 0;
    let mut i = 1;
    let mut c = poly::gcd(&q, &f, &poly::derivative(&q, &f));
    let mut w = poly::div_exact(&q, &f, &c);
    while w.len() > 1 {
        let y = poly::gcd(&q, &w, &c);
        let z = poly::div_exact(&q, &w, &y);
        if z.len() > 1 {
            total += i * sturm_real_roots(&z).expect("squarefree layer");
        }
        i += 1;
        w = y;
        c = poly::div_exact(&q, &c, &w);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    fn p(c: &[i64]) -> QPoly {
        c.iter().map(|x| rat(*x)).collect()
    }

    #[test]
    fn classic_counts() {
        assert_eq!(sturm_real_roots(&p(&[1, 0, 1])).unwrap(), 0);
        assert_eq!(sturm_real_roots(&p(&[7, 7, -7, 1])).unwrap(), 3);
        assert_eq!(sturm_real_roots(&p(&[-2, 0, 0, 1])).unwrap(), 1);
        assert!(sturm_real_roots(&p(&[1, 2, 1])).is_err());
    }

    #[test]
    fn multiplicities_and_half_lines() {
        // (x-1)^2 (x+2)(x^2+1)
        let f = poly::mul(&Rationals, &poly::mul(&Rationals, &p(&[1, -2, 1]), &p(&[2, 1])), &p(&[1, 0, 1]));
        assert_eq!(real_roots_with_multiplicity(&f), 3);
        assert_eq!(real_roots_above(&p(&[-6, 11, -6, 1]), &rat(1)), 2);
        assert_eq!(real_roots_above(&p(&[-6, 11, -6, 1]), &rat(3)), 0);
    }
}
