//! Embeddings between finite fields given by explicit moduli.
//!
//! The embedding `F_p[t]/(m) -> L` sends `t` to the smallest root of `m` in
//! `L` (ordered by coordinate vector). The choice is made once per pair of
//! fields and memoized in an [`Embedder`].

use std::collections::HashMap;
use std::sync::Mutex;

use crate::algebra::ext::Fq;
use crate::algebra::factor;
use crate::algebra::field::{FiniteField, Field};
use crate::algebra::poly;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Embedding {
    pub source: Fq,
    pub target: Fq,
    /// Image of the source generator.
    pub image: Vec<u64>,
}

impl Embedding {
    pub fn apply(&self, a: &[u64]) -> Vec<u64> {
        let t = &self.target;
        let mut acc = t.zero();
        for c in a.iter().rev() {
            acc = t.add(&t.mul(&acc, &self.image), &t.from_i64(*c as i64));
        }
        acc
    }
}

/// Memo table of embeddings keyed by the pair of moduli.
#[derive(Default)]
pub struct Embedder {
    cache: Mutex<HashMap<(Vec<u64>, Vec<u64>), Vec<u64>>>,
}

impl Embedder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn embedding(&self, source: &Fq, target: &Fq) -> Result<Embedding> {
        ext_field_embed(self, source, target)
    }
}

/// Embedding of `source` into `target`; rejects non-dividing degrees.
pub fn ext_field_embed(cache: &Embedder, source: &Fq, target: &Fq) -> Result<Embedding> {
    if source.prime() != target.prime() {
        return Err(Error::InvalidInput("fields of different characteristic".into()));
    }
    if !target.degree().is_multiple_of(source.degree()) {
        return Err(Error::InvalidInput(format!(
            "F_{}^{} does not embed in F_{}^{}",
            source.prime(),
            source.degree(),
            target.prime(),
            target.degree()
        )));
    }
    let key = (source.modulus().clone(), target.modulus().clone());
    if let Some(img) = cache.cache.lock().unwrap().get(&key) {
        return Ok(Embedding { source: source.clone(), target: target.clone(), image: img.clone() });
    }
    let m = poly::map::<crate::algebra::prime::PrimeField, Fq>(target, source.modulus(), |c| target.from_i64(*c as i64));
    let image = factor::roots(target, &m)
        .into_iter()
        .next()
        .ok_or_else(|| Error::Inconsistent("modulus has no root in the target field".into()))?;
    cache.cache.lock().unwrap().insert(key, image.clone());
    Ok(Embedding { source: source.clone(), target: target.clone(), image })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeddings_of_f3_fields() {
        let e = Embedder::new();
        let f3 = Fq::canonical(3, 1).unwrap();
        let f9 = Fq::canonical(3, 2).unwrap();
        let f27 = Fq::canonical(3, 3).unwrap();
        assert!(e.embedding(&f9, &f27).is_err());
        let emb = e.embedding(&f3, &f27).unwrap();
        assert_eq!(emb.apply(&[2]), f27.from_i64(2));
        assert_eq!(emb.apply(&[0]), f27.zero());
        assert_eq!(emb.apply(&[1]), f27.one());
        let f729 = Fq::canonical(3, 6).unwrap();
        let emb = e.embedding(&f9, &f729).unwrap();
        // ring homomorphism on a few pairs
        for (i, j) in [(3u64, 5u64), (7, 8), (4, 4)] {
            let (a, b) = (f9.element(i), f9.element(j));
            assert_eq!(emb.apply(&f9.mul(&a, &b)), f729.mul(&emb.apply(&a), &emb.apply(&b)));
            assert_eq!(emb.apply(&f9.add(&a, &b)), f729.add(&emb.apply(&a), &emb.apply(&b)));
        }
    }
}
