//! Factorization and root counting over finite fields.
//!
//! Squarefree decomposition, distinct-degree splitting with the `q`-power
//! Frobenius computed by repeated modular composition of `x^p`, and
//! Cantor–Zassenhaus equal-degree splitting (odd characteristic).

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::FiniteField;
use crate::algebra::poly::{self, Poly};
use crate::algebra::prime::is_prime_u64;

/// Apply the absolute Frobenius to every coefficient.
pub fn frobenius_coeffs<F: FiniteField>(f: &F, a: &[F::Elem]) -> Poly<F> {
    a.iter().map(|c| f.frobenius(c)).collect()
}

/// Precomputed data for raising residues mod `g` to `p`-th powers:
/// `a(x)^p = sigma(a)(x^p)`.
pub struct FrobeniusMod<'a, F: FiniteField> {
    field: &'a F,
    modulus: Poly<F>,
    /// `(x^p)^i mod g` for `i < deg g`.
    powers: Vec<Poly<F>>,
}

impl<'a, F: FiniteField> FrobeniusMod<'a, F> {
    pub fn new(field: &'a F, g: &[F::Elem]) -> Self {
        let n = g.len() - 1;
        let xp = poly::powmod_u64(field, &poly::x(field), field.prime(), g);
        let mut powers = Vec::with_capacity(n);
        let mut cur = poly::one(field);
        for _ in 0..n {
            powers.push(cur.clone());
            cur = poly::mulmod(field, &cur, &xp, g);
        }
        FrobeniusMod { field, modulus: g.to_vec(), powers }
    }

    /// `a^p mod g` for `a` reduced mod `g`.
    pub fn pth_power(&self, a: &[F::Elem]) -> Poly<F> {
        let f = self.field;
        let n = self.modulus.len() - 1;
        let mut out = vec![f.zero(); n];
        for (c, pw) in a.iter().zip(&self.powers) {
            if f.is_zero(c) {
                continue;
            }
            let s = f.frobenius(c);
            for (o, b) in out.iter_mut().zip(pw) {
                *o = f.add(o, &f.mul(&s, b));
            }
        }
        poly::trimmed(f, out)
    }

    /// `a^(p^n) mod g`.
    pub fn pth_power_iter(&self, a: &[F::Elem], n: usize) -> Poly<F> {
        let mut cur = poly::rem(self.field, a, &self.modulus);
        for _ in 0..n {
            cur = self.pth_power(&cur);
        }
        cur
    }

    /// `a^q mod g` where `q` is the field order.
    pub fn qth_power(&self, a: &[F::Elem]) -> Poly<F> {
        self.pth_power_iter(a, self.field.degree())
    }
}

/// `x^(q^e) mod g`.
pub fn x_q_power_mod<F: FiniteField>(f: &F, g: &[F::Elem], e: usize) -> Poly<F> {
    let fm = FrobeniusMod::new(f, g);
    fm.pth_power_iter(&poly::x(f), e * f.degree())
}

/// Number of distinct roots of `a` in the field, `deg gcd(x^q - x, a)`.
pub fn count_roots<F: FiniteField>(f: &F, a: &[F::Elem]) -> usize {
    let a = poly::trimmed(f, a.to_vec());
    assert!(!a.is_empty(), "root count of the zero polynomial");
    if a.len() == 1 {
        return 0;
    }
    let a = poly::monic(f, &a);
    let xq = x_q_power_mod(f, &a, 1);
    let h = poly::sub(f, &xq, &poly::x(f));
    poly::degree(&poly::gcd(f, &h, &a)).unwrap_or(0)
}

/// Roots of `a` in the field, sorted by enumeration index.
pub fn roots<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let a = poly::trimmed(f, a.to_vec());
    assert!(!a.is_empty(), "roots of the zero polynomial");
    if a.len() == 1 {
        return Vec::new();
    }
    let a = poly::monic(f, &a);
    let xq = x_q_power_mod(f, &a, 1);
    let lin = poly::gcd(f, &poly::sub(f, &xq, &poly::x(f)), &a);
    let mut out: Vec<F::Elem> = equal_degree(f, &lin, 1)
        .into_iter()
        .map(|l| f.neg(&l[0]))
        .collect();
    out.sort_by_key(|r| f.coords(r));
    out
}

/// `p`-th root of a field element.
fn pth_root<F: FiniteField>(f: &F, a: &F::Elem) -> F::Elem {
    let mut cur = a.clone();
    for _ in 1..f.degree() {
        cur = f.frobenius(&cur);
    }
    cur
}

/// Squarefree decomposition: monic `(g_i, i)` with `monic(a) = prod g_i^i`.
pub fn squarefree<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<(Poly<F>, usize)> {
    let a = poly::monic(f, &poly::trimmed(f, a.to_vec()));
    let mut out = Vec::new();
    sqf_rec(f, &a, 1, &mut out);
    out.sort_by_key(|x| x.1);
    // merge equal multiplicities coming from different recursion levels
    let mut merged: Vec<(Poly<F>, usize)> = Vec::new();
    for (g, m) in out {
        if let Some(last) = merged.last_mut() {
            if last.1 == m {
                last.0 = poly::mul(f, &last.0, &g);
                continue;
            }
        }
        merged.push((g, m));
    }
    merged
}

fn sqf_rec<F: FiniteField>(f: &F, a: &[F::Elem], scale: usize, out: &mut Vec<(Poly<F>, usize)>) {
    if a.len() <= 1 {
        return;
    }
    let p = f.prime() as usize;
    let da = poly::derivative(f, a);
    if da.is_empty() {
        // a = b(x^p): take p-th roots
        let b: Poly<F> = a.iter().step_by(p).map(|c| pth_root(f, c)).collect();
        sqf_rec(f, &b, scale * p, out);
        return;
    }
    let mut c = poly::gcd(f, a, &da);
    let mut w = poly::div_exact(f, a, &c);
    let mut i = 1;
    while w.len() > 1 {
        let y = poly::gcd(f, &w, &c);
        let z = poly::div_exact(f, &w, &y);
        if z.len() > 1 {
            out.push((z, i * scale));
        }
        i += 1;
        w = y;
        c = poly::div_exact(f, &c, &w);
    }
    if c.len() > 1 {
        let b: Poly<F> = c.iter().step_by(p).map(|x| pth_root(f, x)).collect();
        sqf_rec(f, &b, scale * p, out);
    }
}

/// Distinct-degree factorization of a monic squarefree polynomial:
/// `(product of all irreducible factors of degree d, d)`.
pub fn distinct_degree<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let mut d = 0;
    let mut h = poly::x(f);
    let mut fm = FrobeniusMod::new(f, &rest);
    while rest.len() > 1 {
        d += 1;
        if 2 * d > rest.len() - 1 {
            let deg = rest.len() - 1;
            out.push((rest, deg));
            break;
        }
        h = fm.qth_power(&poly::rem(f, &h, &rest));
        let g = poly::gcd(f, &poly::sub(f, &h, &poly::x(f)), &rest);
        if g.len() > 1 {
            rest = poly::div_exact(f, &rest, &g);
            h = poly::rem(f, &h, &rest);
            out.push((g, d));
            if rest.len() > 1 {
                fm = FrobeniusMod::new(f, &rest);
            }
        }
    }
    out
}

/// Split a monic squarefree product of degree-`d` irreducibles.
pub fn equal_degree<F: FiniteField>(f: &F, a: &[F::Elem], d: usize) -> Vec<Poly<F>> {
    let n = a.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == d {
        return vec![a.to_vec()];
    }
    assert!(f.prime() != 2, "equal-degree splitting needs odd characteristic");
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let e: BigUint = (f.order().pow(d as u32) - 1u32) >> 1;
    let mut stack = vec![a.to_vec()];
    let mut done = Vec::new();
    while let Some(g) = stack.pop() {
        if g.len() - 1 == d {
            done.push(g);
            continue;
        }
        loop {
            let r: Poly<F> = poly::trimmed(
                f,
                (0..g.len() - 1)
                    .map(|_| {
                        let c: Vec<u64> = (0..f.degree()).map(|_| rng.gen_range(0..f.prime())).collect();
                        f.from_coords(&c)
                    })
                    .collect(),
            );
            if r.len() <= 1 {
                continue;
            }
            let s = poly::powmod(f, &r, &e, &g);
            let h = poly::gcd(f, &poly::sub(f, &s, &poly::one(f)), &g);
            if h.len() > 1 && h.len() < g.len() {
                let other = poly::div_exact(f, &g, &h);
                stack.push(h);
                stack.push(other);
                break;
            }
        }
    }
    done
}

/// Complete factorization into monic irreducibles with multiplicities,
/// sorted by (degree, coefficients).
pub fn factor<F: FiniteField>(f: &F, a: &[F::Elem]) -> Vec<(Poly<F>, usize)> {
    let mut out = Vec::new();
    for (g, m) in squarefree(f, a) {
        for (h, d) in distinct_degree(f, &g) {
            for irr in equal_degree(f, &h, d) {
                out.push((irr, m));
            }
        }
    }
    out.sort_by_key(|(g, m)| (g.len(), g.iter().rev().map(|c| f.coords(c)).collect::<Vec<_>>(), *m));
    out
}

/// Rabin's irreducibility test.
pub fn is_irreducible<F: FiniteField>(f: &F, a: &[F::Elem]) -> bool {
    let a = poly::trimmed(f, a.to_vec());
    if a.len() < 2 {
        return false;
    }
    let n = a.len() - 1;
    if n == 1 {
        return true;
    }
    let a = poly::monic(f, &a);
    let fm = FrobeniusMod::new(f, &a);
    let x = poly::x(f);
    // x^(q^j) for j = 1..n
    let mut pows = Vec::with_capacity(n);
    let mut cur = x.clone();
    for _ in 0..n {
        cur = fm.qth_power(&cur);
        pows.push(cur.clone());
    }
    if poly::sub(f, &pows[n - 1], &x).iter().any(|c| !f.is_zero(c)) {
        return false;
    }
    for r in (2..=n as u64).filter(|r| (n as u64).is_multiple_of(*r) && is_prime_u64(*r)) {
        let j = n / r as usize;
        let g = poly::gcd(f, &poly::sub(f, &pows[j - 1], &x), &a);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ext::Fq;
    use crate::algebra::field::Field;
    use crate::algebra::prime::PrimeField;

    #[test]
    fn root_counts() {
        let f3 = PrimeField::new(3).unwrap();
        assert_eq!(count_roots(&f3, &[1, 0, 1]), 0);
        let f9 = Fq::canonical(3, 2).unwrap();
        let t2p1 = vec![f9.one(), f9.zero(), f9.one()];
        assert_eq!(count_roots(&f9, &t2p1), 2);
        assert_eq!(count_roots(&f3, &[1, 1, 2, 1]), 0);
    }

    #[test]
    fn full_splitting() {
        let f7 = PrimeField::new(7).unwrap();
        let mut a = vec![0u64; 8];
        a[7] = 1;
        a[1] = 6;
        let fac = factor(&f7, &a);
        assert_eq!(fac.len(), 7);
        assert!(fac.iter().all(|(g, m)| g.len() == 2 && *m == 1));
        assert_eq!(count_roots(&f7, &a), 7);
    }

    #[test]
    fn repeated_factors() {
        let f5 = PrimeField::new(5).unwrap();
        // (t-1)^2 (t-2)
        let a = poly::mul(&f5, &poly::mul(&f5, &[4, 1], &[4, 1]), &[3, 1]);
        let fac = factor(&f5, &a);
        assert_eq!(fac, vec![(vec![3, 1], 1), (vec![4, 1], 2)]);
        // p-th powers: (t^2+1)^3 over F_3
        let f3 = PrimeField::new(3).unwrap();
        let b = poly::pow(&f3, &[1, 0, 1], 3);
        assert_eq!(factor(&f3, &b), vec![(vec![1, 0, 1], 3)]);
    }

    #[test]
    fn irreducibility() {
        let f3 = PrimeField::new(3).unwrap();
        assert!(is_irreducible(&f3, &[1, 0, 1]));
        assert!(is_irreducible(&f3, &[1, 1, 2, 1]));
        assert!(!is_irreducible(&f3, &[0, 1, 0, 1]));
        // (t^2+1)(t^2+t+2) has no roots but is reducible
        let r = poly::mul(&f3, &[1, 0, 1], &[2, 1, 1]);
        assert!(!is_irreducible(&f3, &r));
    }
}
