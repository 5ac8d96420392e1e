//! On-disk cache of smooth point counts `N_k`.
//!
//! One file per curve and prime. Body lines read `<p> <k> <N_k>`; the first
//! line carries a digest of the reduced coefficient vector and the last line
//! a digest of everything above it. A file failing either test is ignored.

use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use crate::error::Result;

use super::model::PlaneModel;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "MODCURVE_CACHE_DIR";

#[derive(Clone, Debug)]
pub struct CountCache {
    path: PathBuf,
    p: u64,
    curve: String,
}

/// Digest of `p`, the degree and the sorted nonzero coefficients mod `p`.
pub fn curve_digest(model: &PlaneModel) -> String {
    let mut h = Sha256::new();
    h.update(format!("p={} d={}\n", model.prime_field().p(), model.degree()));
    for (e, c) in &model.form().terms {
        h.update(format!("{} {} {} {}\n", e[0], e[1], e[2], c));
    }
    hex::encode(h.finalize())
}

fn body_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

impl CountCache {
    pub fn new(dir: &Path, model: &PlaneModel) -> Self {
        let curve = curve_digest(model);
        let p = model.prime_field().p();
        let path = dir.join(format!("counts-p{p}-{}.txt", &curve[..16]));
        CountCache { path, p, curve }
    }

    /// Directory from `MODCURVE_CACHE_DIR`, if set and non-empty.
    pub fn env_dir() -> Option<PathBuf> {
        std::env::var_os(CACHE_ENV).filter(|s| !s.is_empty()).map(PathBuf::from)
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    /// Cached counts, or an empty map if the file is missing, stale or damaged.
    pub fn load(&self) -> BTreeMap<usize, u64> {
        fs::read_to_string(&self.path).ok().and_then(|t| self.parse(&t)).unwrap_or_default()
    }

    fn parse(&self, text: &str) -> Option<BTreeMap<usize, u64>> {
        let lines: Vec<&str> = text.lines().collect();
        let (last, body) = lines.split_last()?;
        let sum = last.strip_prefix("# checksum ")?;
        let mut covered = body.join("\n");
        covered.push('\n');
        if body_digest(&covered) != sum {
            return None;
        }
        let (head, rows) = body.split_first()?;
        if head.strip_prefix("# curve ")? != self.curve {
            return None;
        }
        let mut out = BTreeMap::new();
        for row in rows {
            let f: Vec<u64> = row.split_whitespace().map(|s| s.parse().ok()).collect::<Option<_>>()?;
            match f.as_slice() {
                [p, k, n] if *p == self.p && *k >= 1 => {
                    out.insert(*k as usize, *n);
                }
                _ => return None,
            }
        }
        Some(out)
    }

    /// Write all counts atomically (temporary file, then rename).
    pub fn store(&self, counts: &BTreeMap<usize, u64>) -> Result<()> {
        let mut text = format!("# curve {}\n", self.curve);
        for (k, n) in counts {
            text.push_str(&format!("{} {} {}\n", self.p, k, n));
        }
        let sum = body_digest(&text);
        text.push_str(&format!("# checksum {sum}\n"));
        if let Some(dir) = self.path.parent() {
            fs::create_dir_all(dir)?;
        }
        let tmp = self.path.with_extension(format!("tmp{}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(text.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::prime::PrimeField;
    use crate::data;

    fn model() -> PlaneModel {
        let fp = PrimeField::new(3).unwrap();
        PlaneModel::new(fp, data::sextic_mod(&fp)).unwrap()
    }

    #[test]
    fn round_trip_and_corruption() {
        let dir = tempfile::tempdir().unwrap();
        let m = model();
        let cache = CountCache::new(dir.path(), &m);
        assert!(cache.load().is_empty());
        let counts: BTreeMap<usize, u64> = [(1, 4), (2, 10), (3, 28)].into_iter().collect();
        cache.store(&counts).unwrap();
        assert_eq!(cache.load(), counts);

        let text = fs::read_to_string(cache.path()).unwrap();
        fs::write(cache.path(), text.replace("3 2 10", "3 2 11")).unwrap();
        assert!(cache.load().is_empty());
    }

    #[test]
    fn digest_tracks_the_model() {
        let fp = PrimeField::new(3).unwrap();
        let a = model();
        let b = PlaneModel::new(fp, data::form_mod(&fp, &data::sextic_perturbed(0, 1))).unwrap();
        assert_ne!(curve_digest(&a), curve_digest(&b));
    }
}
