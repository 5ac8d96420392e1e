//! Elliptic curves over `Q` in long Weierstrass form: rational torsion by
//! Nagell–Lutz and point counts over finite fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::ext::Fq;
use crate::algebra::field::{Field, FiniteField};
use crate::algebra::integer::{divisors, exact_sqrt, factor_bigint};
use crate::algebra::qpoly;
use crate::algebra::rational::rat;
use crate::error::{Error, Result};

/// `y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    pub label: String,
    pub a: [i64; 5],
}

/// Affine point, or `None` for the point at infinity.
pub type Point = Option<(BigRational, BigRational)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Torsion {
    /// Invariant factors `d1 | d2`.
    pub structure: Vec<u64>,
    /// Affine torsion points on the long model, sorted.
    pub points: Vec<(BigRational, BigRational)>,
}

impl EllipticCurve {
    pub fn new(label: &str, a: [i64; 5]) -> Result<Self> {
        let e = EllipticCurve { label: label.into(), a };
        if e.discriminant().is_zero() {
            return Err(Error::InvalidInput(format!("{label} is singular")));
        }
        Ok(e)
    }

    fn b_invariants(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        let [a1, a2, a3, a4, a6] = self.a.map(BigInt::from);
        let b2 = &a1 * &a1 + 4 * &a2;
        let b4 = 2 * &a4 + &a1 * &a3;
        let b6 = &a3 * &a3 + 4 * &a6;
        let b8 = &a1 * &a1 * &a6 + 4 * &a2 * &a6 - &a1 * &a3 * &a4 + &a2 * &a3 * &a3 - &a4 * &a4;
        (b2, b4, b6, b8)
    }

    pub fn c_invariants(&self) -> (BigInt, BigInt) {
        let (b2, b4, b6, _) = self.b_invariants();
        let c4 = &b2 * &b2 - 24 * &b4;
        let c6 = -(&b2 * &b2 * &b2) + 36 * &b2 * &b4 - 216 * &b6;
        (c4, c6)
    }

    pub fn discriminant(&self) -> BigInt {
        let (b2, b4, b6, b8) = self.b_invariants();
        -(&b2 * &b2 * &b8) - 8 * &b4 * &b4 * &b4 - 27 * &b6 * &b6 + 9 * &b2 * &b4 * &b6
    }

    /// Coefficients `(A, B)` of the integral short model `Y^2 = X^3 + A X + B`
    /// with `X = 36x + 3 b2`, `Y = 108 (2y + a1 x + a3)`.
    pub fn short_model(&self) -> (BigInt, BigInt) {
        let (c4, c6) = self.c_invariants();
        (-27 * c4, -54 * c6)
    }

    fn to_long(&self, p: &(BigRational, BigRational)) -> (BigRational, BigRational) {
        let (b2, ..) = self.b_invariants();
        let [a1, _, a3, _, _] = self.a.map(rat);
        let x = (&p.0 - BigRational::from_integer(3 * b2)) / rat(36);
        let y = (&p.1 / rat(108) - &a1 * &x - a3) / rat(2);
        (x, y)
    }

    pub fn on_curve(&self, p: &(BigRational, BigRational)) -> bool {
        let [a1, a2, a3, a4, a6] = self.a.map(rat);
        let (x, y) = p;
        y * y + &a1 * x * y + &a3 * y == x * x * x + &a2 * x * x + &a4 * x + a6
    }

    /// Rational torsion: Nagell–Lutz candidates on the short model, kept when
    /// their multiples stay among the candidates and return to infinity.
    pub fn torsion(&self) -> Result<Torsion> {
        let (a, b) = self.short_model();
        let short = Short { a: BigRational::from_integer(a.clone()) };
        let disc = (BigInt::from(4) * &a * &a * &a + BigInt::from(27) * &b * &b).abs();
        let fac = factor_bigint(&disc, 1 << 24)
            .ok_or_else(|| Error::Exhausted("discriminant has a large prime factor".into()))?;
        let mut ys = vec![BigInt::zero()];
        for d in divisors(&fac) {
            if let Some(r) = exact_sqrt(&d) {
                if !r.is_zero() {
                    ys.push(r.clone());
                    ys.push(-r);
                }
            }
        }
        let mut cands: Vec<(BigRational, BigRational)> = Vec::new();
        for y in &ys {
            let cubic = vec![
                BigRational::from_integer(&b - y * y),
                BigRational::from_integer(a.clone()),
                BigRational::zero(),
                BigRational::one(),
            ];
            let roots = qpoly::rational_roots(&cubic).ok_or_else(|| Error::Exhausted("root search failed".into()))?;
            for x in roots.into_iter().filter(|x| x.is_integer()) {
                cands.push((x, BigRational::from_integer(y.clone())));
            }
        }
        cands.sort();
        cands.dedup();

        let mut torsion = Vec::new();
        for p in &cands {
            let mut q: Point = Some(p.clone());
            for _ in 0..=cands.len() {
                q = short.add(&q, &Some(p.clone()));
                match &q {
                    None => {
                        torsion.push(p.clone());
                        break;
                    }
                    Some(r) if cands.binary_search(r).is_err() => break,
                    _ => {}
                }
            }
        }
        // closure under addition
        let mut group: Vec<Point> = vec![None];
        group.extend(torsion.iter().cloned().map(Some));
        for x in &group {
            for y in &group {
                if !group.contains(&short.add(x, y)) {
                    return Err(Error::Inconsistent("torsion candidates are not closed under addition".into()));
                }
            }
        }
        let n = group.len() as u64;
        let two = 1 + torsion.iter().filter(|p| p.1.is_zero()).count() as u64;
        let structure = if two == 4 { vec![2, n / 2] } else { vec![n] };
        let mut points: Vec<_> = torsion.iter().map(|p| self.to_long(p)).collect();
        points.sort();
        if !points.iter().all(|p| self.on_curve(p)) {
            return Err(Error::Inconsistent("torsion point not on the long model".into()));
        }
        Ok(Torsion { structure: structure.into_iter().filter(|d| *d > 1).collect(), points })
    }

    /// `#E(F_q)` by enumerating `x` and solving the quadratic in `y`.
    pub fn count_points(&self, fq: &Fq) -> Result<u64> {
        if fq.prime() == 2 {
            return Err(Error::InvalidInput("point counting needs odd characteristic".into()));
        }
        let q = fq.order_u64().ok_or_else(|| Error::InvalidInput("field too large".into()))?;
        let c: Vec<Vec<u64>> = self.a.iter().map(|v| fq.from_i64(*v)).collect();
        let four = fq.from_i64(4);
        let mut n = 1u64;
        for i in 0..q {
            let x = fq.element(i);
            let lin = fq.add(&fq.mul(&c[0], &x), &c[2]);
            let x2 = fq.mul(&x, &x);
            let rhs = fq.add(
                &fq.add(&fq.mul(&x2, &x), &fq.mul(&c[1], &x2)),
                &fq.add(&fq.mul(&c[3], &x), &c[4]),
            );
            let disc = fq.add(&fq.mul(&lin, &lin), &fq.mul(&four, &rhs));
            n += (1 + fq.legendre(&disc)) as u64;
        }
        Ok(n)
    }
}

/// Group law on `Y^2 = X^3 + A X + B` over `Q`; only `A` enters.
struct Short {
    a: BigRational,
}

impl Short {
    fn add(&self, p: &Point, q: &Point) -> Point {
        let (Some((x1, y1)), Some((x2, y2))) = (p, q) else {
            return p.clone().or_else(|| q.clone());
        };
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return None;
            }
            (rat(3) * x1 * x1 + &self.a) / (rat(2) * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - x1 - x2;
        let y3 = &lambda * (x1 - &x3) - y1;
        Some((x3, y3))
    }
}

/// `|N - q - 1| <= 2 sqrt(q)`, tested as `(N - q - 1)^2 <= 4q`.
pub fn hasse_holds(n: u64, q: u64) -> bool {
    let t = n as i128 - q as i128 - 1;
    t * t <= 4 * q as i128
}

/// `gcd` of a list of counts.
pub fn gcd_all(xs: &[u64]) -> u64 {
    xs.iter().fold(0u64, |g, x| g.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_two_torsion() {
        let e = EllipticCurve::new("x^3 - x", [0, 0, 0, -1, 0]).unwrap();
        let t = e.torsion().unwrap();
        assert_eq!(t.structure, vec![2, 2]);
        assert_eq!(t.points.len(), 3);
    }

    #[test]
    fn cubic_extension_count_matches_trace() {
        // N_{p^3} = p^3 + 1 - (a^3 - 3 p a) with a = p + 1 - N_p
        let e = EllipticCurve::new("15a1", [1, 1, 1, -10, -10]).unwrap();
        for p in [7u64, 11, 13] {
            let np = e.count_points(&Fq::canonical(p, 1).unwrap()).unwrap() as i64;
            let n3 = e.count_points(&Fq::canonical(p, 3).unwrap()).unwrap() as i64;
            let a = p as i64 + 1 - np;
            assert_eq!(n3, (p as i64).pow(3) + 1 - (a * a * a - 3 * p as i64 * a));
            assert!(hasse_holds(n3 as u64, p.pow(3)));
        }
    }
}
