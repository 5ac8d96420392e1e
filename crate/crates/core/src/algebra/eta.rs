//! The cubic generator of the real subfield of the 7th cyclotomic field.

use num_rational::BigRational;

use crate::algebra::ext::NumberField;
use crate::algebra::factor;
use crate::algebra::field::Field;
use crate::algebra::poly::{self, Poly};
use crate::algebra::prime::PrimeField;
use crate::algebra::rational::{rat, reduce_mod_p, Rationals};
use crate::error::{Error, Result};

/// `t^3 - 7t^2 + 7t + 7`, little-endian.
pub fn eta_minpoly_coeffs() -> [i64; 4] {
    [7, 7, -7, 1]
}

/// Evidence gathered while certifying the minimal polynomial of
/// `eta = 2(z^3 + z^-3) + 3`.
#[derive(Clone, Debug)]
pub struct EtaCertificate {
    pub minpoly: Poly<Rationals>,
    /// `G(t, 1) = c(t)^7` and `c` is the squarefree part of `G(t, 1)`.
    pub is_cubic_base: bool,
    /// `c(eta) = 0` in `Q[z]/(z^6 + ... + 1)`.
    pub vanishes_in_cyclotomic: bool,
    pub no_rational_root: bool,
    pub reduction_mod_3: Vec<u64>,
    pub irreducible_mod_3: bool,
}

/// `G(y1, y2) = (y1^3 - 7 y1^2 y2 + 7 y1 y2^2 + 7 y2^3)^7` dehomogenized at
/// `y2 = 1`.
fn g_dehomogenized() -> Poly<Rationals> {
    let q = Rationals;
    let c: Poly<Rationals> = eta_minpoly_coeffs().iter().map(|x| rat(*x)).collect();
    poly::pow(&q, &c, 7)
}

/// Returns `t^3 - 7t^2 + 7t + 7` after checking it symbolically.
pub fn minpoly_eta() -> Result<EtaCertificate> {
    let q = Rationals;
    let c: Poly<Rationals> = eta_minpoly_coeffs().iter().map(|x| rat(*x)).collect();

    let g = g_dehomogenized();
    let sqfree = poly::div_exact(&q, &g, &poly::gcd(&q, &g, &poly::derivative(&q, &g)));
    let is_cubic_base = poly::monic(&q, &sqfree) == c && poly::pow(&q, &c, 7) == g;

    // eta in Q(zeta_7): zeta^-3 = zeta^4
    let phi7: Poly<Rationals> = vec![rat(1); 7];
    let k = NumberField::new_unchecked(q, phi7);
    let z = k.generator();
    let eta = k.add(&k.mul(&k.from_i64(2), &k.add(&k.pow(&z, 3), &k.pow(&z, 4))), &k.from_i64(3));
    let mut acc = k.zero();
    for coef in c.iter().rev() {
        acc = k.add(&k.mul(&acc, &eta), &k.from_base(coef));
    }
    let vanishes_in_cyclotomic = k.is_zero(&acc);

    let no_rational_root = [1i64, -1, 7, -7]
        .iter()
        .all(|r| !q.is_zero(&poly::eval(&q, &c, &rat(*r))));

    let f3 = PrimeField::new(3)?;
    let red: Vec<u64> = c.iter().map(|x| reduce_mod_p(x, &f3).expect("integral")).collect();
    let irreducible_mod_3 = factor::is_irreducible(&f3, &red);

    let cert = EtaCertificate {
        minpoly: c,
        is_cubic_base,
        vanishes_in_cyclotomic,
        no_rational_root,
        reduction_mod_3: red,
        irreducible_mod_3,
    };
    if !(cert.is_cubic_base && cert.vanishes_in_cyclotomic && cert.no_rational_root) {
        return Err(Error::Inconsistent("minimal polynomial of eta failed verification".into()));
    }
    Ok(cert)
}

/// Reduction of the minimal polynomial modulo `p`.
pub fn minpoly_mod_p(p: &PrimeField) -> Vec<u64> {
    eta_minpoly_coeffs().iter().map(|x| p.reduce_i64(*x)).collect()
}

/// Whether `p` is inert in the cubic field (minimal polynomial irreducible
/// mod `p`).
pub fn is_inert(p: u64) -> Result<bool> {
    let fp = PrimeField::new(p)?;
    Ok(factor::is_irreducible(&fp, &minpoly_mod_p(&fp)))
}

pub fn as_rationals(c: &[i64]) -> Vec<BigRational> {
    c.iter().map(|x| rat(*x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn certificate_holds() {
        let cert = minpoly_eta().unwrap();
        assert_eq!(cert.reduction_mod_3, vec![1, 1, 2, 1]);
        assert!(cert.irreducible_mod_3);
    }

    #[test]
    fn float_sanity() {
        let x = 4.0 * (6.0 * std::f64::consts::PI / 7.0).cos() + 3.0;
        let v = x * x * x - 7.0 * x * x + 7.0 * x + 7.0;
        assert!(v.abs() < 1e-12);
    }

    #[test]
    fn inert_primes() {
        assert!(is_inert(3).unwrap());
        assert!(!is_inert(13).unwrap());
        assert!(is_inert(17).unwrap());
        assert!(!is_inert(29).unwrap());
    }
}
