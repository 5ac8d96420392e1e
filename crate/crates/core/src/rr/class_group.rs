//! Degree-0 divisor classes on a plane curve over `F_p`.
//!
//! A class is stored as an effective divisor `E` of degree `deg B` standing
//! for `[E - B]`, where `B` is a fixed base divisor of degree at least the
//! genus. Sums are reduced back to that shape with a Riemann–Roch space.

use crate::algebra::integer::factor_u64;
use crate::curve::{Divisor, PlaceKey};
use crate::error::{Error, Result};

use super::plane::PlaneRR;

/// Least divisor `m` of `group_order` with `m * x = 0`, given a test for
/// `n * x = 0`.
pub fn order_from_multiples(group_order: u64, mut is_zero: impl FnMut(u64) -> Result<bool>) -> Result<u64> {
    if !is_zero(group_order)? {
        return Err(Error::Inconsistent("class is not killed by the group order".into()));
    }
    let mut m = group_order;
    for (l, _) in factor_u64(group_order) {
        while m.is_multiple_of(l) && is_zero(m / l)? {
            m /= l;
        }
    }
    Ok(m)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Class {
    pub effective: Divisor,
}

pub struct PlaneClassGroup<'a> {
    pub rr: PlaneRR<'a>,
    pub base: Divisor,
}

impl<'a> PlaneClassGroup<'a> {
    /// Uses `g * P0` as base, with `P0` the first place of least degree.
    pub fn new(rr: PlaneRR<'a>) -> Result<Self> {
        let g = rr.model.genus();
        let mut n = 1;
        let p0 = loop {
            if let Some(k) = rr.model.places_up_to(n).into_iter().next() {
                break k;
            }
            n += 1;
            if n > 12 {
                return Err(Error::Exhausted("no place of small degree".into()));
            }
        };
        let mult = (g + p0.degree() as i64 - 1) / p0.degree() as i64;
        Ok(PlaneClassGroup { base: Divisor::place(p0).scale(mult.max(1)), rr })
    }

    pub fn base_place(&self) -> &PlaceKey {
        self.base.support().next().unwrap()
    }

    /// Reduced representative of the class of a degree-0 divisor.
    pub fn class_of(&self, d: &Divisor) -> Result<Class> {
        if d.degree() != 0 {
            return Err(Error::InvalidInput("classes need degree 0".into()));
        }
        let target = d + &self.base;
        let s = self.rr.space(&target)?;
        let g = s
            .basis
            .first()
            .ok_or_else(|| Error::Inconsistent("Riemann–Roch space of degree >= g is empty".into()))?;
        let e = &(&self.rr.model.intersection_divisor(g)? - &s.div_h0) + &target;
        if !e.dominates(&Divisor::zero()) {
            return Err(Error::Inconsistent("reduced divisor is not effective".into()));
        }
        Ok(Class { effective: e })
    }

    /// The degree-0 divisor `E - B` representing a class.
    pub fn divisor(&self, a: &Class) -> Divisor {
        &a.effective - &self.base
    }

    pub fn zero(&self) -> Result<Class> {
        self.class_of(&Divisor::zero())
    }

    pub fn add(&self, a: &Class, b: &Class) -> Result<Class> {
        self.class_of(&(&self.divisor(a) + &self.divisor(b)))
    }

    pub fn neg(&self, a: &Class) -> Result<Class> {
        self.class_of(&-&self.divisor(a))
    }

    pub fn sub(&self, a: &Class, b: &Class) -> Result<Class> {
        self.class_of(&(&self.divisor(a) - &self.divisor(b)))
    }

    pub fn mul(&self, n: i64, a: &Class) -> Result<Class> {
        let mut base = if n < 0 { self.neg(a)? } else { a.clone() };
        let mut n = n.unsigned_abs();
        let mut acc: Option<Class> = None;
        while n > 0 {
            if n & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(x) => self.add(&x, &base)?,
                });
            }
            n >>= 1;
            if n > 0 {
                base = self.add(&base, &base)?;
            }
        }
        match acc {
            Some(x) => Ok(x),
            None => self.zero(),
        }
    }

    pub fn is_zero(&self, a: &Class) -> Result<bool> {
        Ok(self.rr.is_principal(&self.divisor(a))?.0)
    }

    pub fn equal(&self, a: &Class, b: &Class) -> Result<bool> {
        Ok(self.rr.is_principal(&(&self.divisor(a) - &self.divisor(b)))?.0)
    }

    pub fn order(&self, a: &Class, group_order: u64) -> Result<u64> {
        order_from_multiples(group_order, |n| self.is_zero(&self.mul(n as i64, a)?))
    }

    /// Degree-0 samples `P - deg(P) * P0` over places of degree at most `n`.
    pub fn samples(&self, n: usize) -> Vec<Divisor> {
        let p0 = self.base_place().clone();
        self.rr
            .model
            .places_up_to(n)
            .into_iter()
            .filter(|k| *k != p0)
            .map(|k| {
                let d = k.degree() as i64;
                &Divisor::place(k) - &Divisor::place(p0.clone()).scale(d)
            })
            .collect()
    }
}

/// One Sylow factor of a finite abelian group.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SylowPart {
    pub prime: u64,
    pub exponent: u32,
    /// Cyclic factor orders `l^k`, or empty if undecided.
    pub factors: Vec<u64>,
    pub certificate: String,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct ClassGroupData {
    pub order: u64,
    pub sylow: Vec<SylowPart>,
    /// Invariant factors `d_1 | d_2 | ...`; empty if some Sylow part is undecided.
    pub invariant_factors: Vec<u64>,
    pub conclusive: bool,
}

/// Invariant factors from the cyclic decompositions of the Sylow subgroups.
pub fn invariant_factors(parts: &[Vec<u64>]) -> Vec<u64> {
    let rank = parts.iter().map(|p| p.len()).max().unwrap_or(0);
    let mut out = vec![1u64; rank];
    for p in parts {
        let mut sorted = p.clone();
        sorted.sort_unstable();
        for (i, q) in sorted.iter().rev().enumerate() {
            out[rank - 1 - i] *= q;
        }
    }
    out.into_iter().filter(|&d| d > 1).collect()
}

/// Structure of `J(F_p)` from its order and sampled classes. Sylow parts of
/// order `l` or `l^2` are decided; larger ones are left undecided.
pub fn class_group_structure(
    group: &PlaneClassGroup<'_>,
    group_order: u64,
    samples: &[Class],
    hint: Option<&Class>,
) -> Result<ClassGroupData> {
    let mut sylow = Vec::new();
    let mut decided = Vec::new();
    for (l, e) in factor_u64(group_order) {
        let cof = group_order / l.pow(e);
        let proj: Vec<Class> = samples.iter().map(|z| group.mul(cof as i64, z)).collect::<Result<_>>()?;
        let mut part = SylowPart { prime: l, exponent: e, factors: Vec::new(), certificate: String::new() };
        let nonzero = |c: &Class| -> Result<bool> { Ok(!group.is_zero(c)?) };
        match e {
            1 => {
                for (i, y) in proj.iter().enumerate() {
                    if nonzero(y)? {
                        part.factors = vec![l];
                        part.certificate = format!("sample {i} projects to a class of order {l}");
                        break;
                    }
                }
            }
            2 => {
                let mut full = None;
                for (i, y) in proj.iter().enumerate() {
                    if nonzero(&group.mul(l as i64, y)?)? {
                        full = Some(i);
                        break;
                    }
                }
                if let Some(i) = full {
                    part.factors = vec![l * l];
                    part.certificate = format!("sample {i} projects to a class of order {}", l * l);
                } else {
                    let a = match hint {
                        Some(h) if nonzero(h)? && !nonzero(&group.mul(l as i64, h)?)? => Some(h.clone()),
                        _ => {
                            let mut first = None;
                            for y in &proj {
                                if nonzero(y)? {
                                    first = Some(y.clone());
                                    break;
                                }
                            }
                            first
                        }
                    };
                    if let Some(a) = a {
                        let multiples: Vec<Class> =
                            (0..l as i64).map(|j| group.mul(j, &a)).collect::<Result<_>>()?;
                        'outer: for (i, y) in proj.iter().enumerate() {
                            for m in &multiples {
                                if group.equal(y, m)? {
                                    continue 'outer;
                                }
                            }
                            part.factors = vec![l, l];
                            part.certificate = format!(
                                "exponent {l} on all samples; sample {i} differs from every multiple of a class of order {l} ({l} non-principality tests)"
                            );
                            break;
                        }
                    }
                }
            }
            _ => {
                part.certificate = format!("Sylow {l}-subgroup of order {l}^{e} not decided");
            }
        }
        if part.factors.is_empty() && part.certificate.is_empty() {
            part.certificate = "samples did not decide the structure".into();
        }
        decided.push(part.factors.clone());
        sylow.push(part);
    }
    let conclusive = sylow.iter().all(|p| !p.factors.is_empty());
    let invariant = if conclusive { invariant_factors(&decided) } else { Vec::new() };
    Ok(ClassGroupData { order: group_order, sylow, invariant_factors: invariant, conclusive })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factor_assembly() {
        assert_eq!(invariant_factors(&[vec![7, 7], vec![23]]), vec![7, 161]);
        assert_eq!(invariant_factors(&[vec![2, 4], vec![343], vec![31]]), vec![2, 4 * 343 * 31]);
        assert_eq!(invariant_factors(&[]), Vec::<u64>::new());
    }

    #[test]
    fn order_search() {
        // x of order 14 in Z/28
        let ord = order_from_multiples(28, |n| Ok((2 * n) % 28 == 0)).unwrap();
        assert_eq!(ord, 14);
    }
}
