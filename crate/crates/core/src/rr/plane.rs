//! Riemann–Roch spaces on a nodal plane curve by adjoint forms.
//!
//! `L(D) = { G/H0 : G adjoint of degree m, div(G) >= div(H0) - D }` where
//! `div(H0) >= D+ + A` and `A` is the sum of the branch places at the nodes.
//! Forms are taken modulo the curve equation by restricting to monomials of
//! `v`-degree below `deg F`.

use std::collections::BTreeMap;

use crate::algebra::field::{Field, FiniteField};
use crate::algebra::prime::PrimeField;
use crate::curve::form::{monomials, Form};
use crate::curve::model::{PlaneModel, Pullback};
use crate::curve::{Divisor, PlaceKey};
use crate::error::{Error, Result};

/// Largest auxiliary degree tried.
pub const MAX_DEGREE: u32 = 12;

#[derive(Clone, Debug)]
pub struct PlaneSpace {
    pub divisor: Divisor,
    pub degree: u32,
    pub h0: Form<PrimeField>,
    pub div_h0: Divisor,
    /// Numerators `G` of a basis `G/H0`.
    pub basis: Vec<Form<PrimeField>>,
}

impl PlaneSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Monomials of degree `m` that are reduced modulo the curve equation.
pub fn reduced_monomials(m: u32, d: u32) -> Vec<[u32; 3]> {
    monomials(m).into_iter().filter(|e| e[1] < d).collect()
}

pub struct PlaneRR<'a> {
    pub model: &'a PlaneModel,
}

impl<'a> PlaneRR<'a> {
    pub fn new(model: &'a PlaneModel) -> Self {
        PlaneRR { model }
    }

    /// Rows expressing `ord_P(sum a_k M_k) >= r_P` over `F_p`.
    fn conditions(&self, basis: &[[u32; 3]], m: u32, orders: &BTreeMap<PlaceKey, i64>) -> Vec<Vec<u64>> {
        let mut rows = Vec::new();
        for (key, &r) in orders {
            if r <= 0 {
                continue;
            }
            let place = self.model.place_data(key);
            let pb = Pullback::new(&place, r as usize, m as usize);
            let l = pb.field().clone();
            let chart = key.point.chart;
            let series: Vec<Vec<Vec<u64>>> = basis
                .iter()
                .map(|e| {
                    let (i, j) = chart.exponents(*e);
                    pb.monomial(i as usize, j as usize)
                })
                .collect();
            for t in 0..r as usize {
                for s in 0..l.degree() {
                    rows.push(series.iter().map(|ser| l.coords(&ser[t])[s]).collect());
                }
            }
        }
        rows
    }

    fn solve(&self, m: u32, orders: &BTreeMap<PlaceKey, i64>) -> Vec<Form<PrimeField>> {
        let fp = *self.model.prime_field();
        let basis = reduced_monomials(m, self.model.degree());
        let rows = self.conditions(&basis, m, orders);
        fp.kernel(rows, basis.len())
            .into_iter()
            .map(|v| Form::from_coeffs(&fp, m, &basis, &v))
            .collect()
    }

    /// Deterministic auxiliary form with `div(H0) >= D+ + A`.
    pub fn auxiliary(&self, positive: &Divisor) -> Result<(u32, Form<PrimeField>)> {
        let mut orders: BTreeMap<PlaceKey, i64> = positive.iter().map(|(k, c)| (k.clone(), *c)).collect();
        for b in self.model.nodes().values().flatten() {
            *orders.entry(b.clone()).or_insert(0) += 1;
        }
        let conds: i64 = orders.iter().map(|(k, c)| c * k.degree() as i64).sum();
        let d = self.model.degree();
        let start = (1..=MAX_DEGREE)
            .find(|&m| reduced_monomials(m, d).len() as i64 > conds)
            .ok_or_else(|| Error::Exhausted(format!("no auxiliary form of degree <= {MAX_DEGREE}")))?;
        for m in start..=MAX_DEGREE {
            if let Some(h0) = self.solve(m, &orders).into_iter().next() {
                return Ok((m, h0));
            }
        }
        Err(Error::Exhausted(format!("no auxiliary form of degree <= {MAX_DEGREE}")))
    }

    pub fn space(&self, d: &Divisor) -> Result<PlaneSpace> {
        let (m, h0) = self.auxiliary(&d.positive_part())?;
        let div_h0 = self.model.intersection_divisor(&h0)?;
        let mut orders: BTreeMap<PlaceKey, i64> = BTreeMap::new();
        for (k, c) in div_h0.iter() {
            orders.insert(k.clone(), *c);
        }
        for (k, c) in d.iter() {
            *orders.entry(k.clone()).or_insert(0) -= c;
        }
        let basis = if d.degree() < 0 { Vec::new() } else { self.solve(m, &orders) };
        Ok(PlaneSpace { divisor: d.clone(), degree: m, h0, div_h0, basis })
    }

    pub fn dimension(&self, d: &Divisor) -> Result<usize> {
        Ok(self.space(d)?.dim())
    }

    /// `div(G/H0)` recomputed from intersection divisors.
    pub fn divisor_of(&self, g: &Form<PrimeField>, h0_div: &Divisor) -> Result<Divisor> {
        Ok(&self.model.intersection_divisor(g)? - h0_div)
    }

    /// Principality of a degree-0 divisor, with a witness `G/H0` whose
    /// divisor is recomputed and compared with `-D`.
    pub fn is_principal(&self, d: &Divisor) -> Result<(bool, Option<(Form<PrimeField>, Form<PrimeField>)>)> {
        if d.degree() != 0 {
            return Err(Error::InvalidInput("principality needs a degree-0 divisor".into()));
        }
        let s = self.space(d)?;
        match s.basis.first() {
            None => Ok((false, None)),
            Some(g) => {
                let div = self.divisor_of(g, &s.div_h0)?;
                if div != -d {
                    return Err(Error::Inconsistent("witness divisor differs from -D".into()));
                }
                Ok((true, Some((g.clone(), s.h0.clone()))))
            }
        }
    }

    /// A canonical divisor `div(C) - A` for the first adjoint form `C` of degree `d - 3`.
    pub fn canonical_divisor(&self) -> Result<Divisor> {
        let adj = self.adjoint_forms(self.model.degree() - 3);
        let c = adj.first().ok_or_else(|| Error::Inconsistent("no adjoint forms".into()))?;
        Ok(&self.model.intersection_divisor(c)? - &self.model.adjoint_divisor())
    }

    /// Basis of adjoint forms of degree `m` (vanishing on every node branch).
    pub fn adjoint_forms(&self, m: u32) -> Vec<Form<PrimeField>> {
        let orders = self.model.adjoint_divisor().iter().map(|(k, c)| (k.clone(), *c)).collect();
        self.solve(m, &orders)
    }
}
