//! Divisors: finite integer combinations of places.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use super::place::PlaceKey;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Divisor {
    terms: BTreeMap<PlaceKey, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn place(key: PlaceKey) -> Self {
        let mut d = Self::zero();
        d.add_term(key, 1);
        d
    }

    pub fn add_term(&mut self, key: PlaceKey, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn coeff(&self, key: &PlaceKey) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PlaceKey, &i64)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &PlaceKey> {
        self.terms.keys()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(k, c)| c * k.degree() as i64).sum()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn positive_part(&self) -> Divisor {
        Divisor { terms: self.terms.iter().filter(|(_, &c)| c > 0).map(|(k, c)| (k.clone(), *c)).collect() }
    }

    pub fn negative_part(&self) -> Divisor {
        Divisor { terms: self.terms.iter().filter(|(_, &c)| c < 0).map(|(k, c)| (k.clone(), -c)).collect() }
    }

    pub fn scale(&self, m: i64) -> Divisor {
        if m == 0 {
            return Divisor::zero();
        }
        Divisor { terms: self.terms.iter().map(|(k, c)| (k.clone(), c * m)).collect() }
    }

    /// `self >= other` coefficientwise.
    pub fn dominates(&self, other: &Divisor) -> bool {
        (self - other).terms.values().all(|&c| c >= 0)
    }
}

impl FromIterator<(PlaceKey, i64)> for Divisor {
    fn from_iter<I: IntoIterator<Item = (PlaceKey, i64)>>(iter: I) -> Self {
        let mut d = Divisor::zero();
        for (k, c) in iter {
            d.add_term(k, c);
        }
        d
    }
}

impl Add for &Divisor {
    type Output = Divisor;
    fn add(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), *c);
        }
        out
    }
}

impl Sub for &Divisor {
    type Output = Divisor;
    fn sub(self, rhs: &Divisor) -> Divisor {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }
}

impl Neg for &Divisor {
    type Output = Divisor;
    fn neg(self) -> Divisor {
        self.scale(-1)
    }
}

impl Add for Divisor {
    type Output = Divisor;
    fn add(self, rhs: Divisor) -> Divisor {
        &self + &rhs
    }
}

impl Sub for Divisor {
    type Output = Divisor;
    fn sub(self, rhs: Divisor) -> Divisor {
        &self - &rhs
    }
}
