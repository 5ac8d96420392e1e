//! Regression fixtures: derived values from an earlier verified run.
//!
//! The file maps item names to JSON values. It is only written on request;
//! when missing, the published checks decide the verdict on their own.

use std::collections::BTreeMap;
use std::path::Path;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::report::{CheckSet, Source};

/// Default location, relative to the repository root.
pub const DEFAULT_PATH: &str = "fixtures/regression.json";

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Fixtures {
    pub items: BTreeMap<String, Value>,
}

impl Fixtures {
    pub fn insert(&mut self, key: &str, v: impl serde::Serialize) {
        self.items.insert(key.into(), serde_json::to_value(v).expect("fixture serializes"));
    }

    pub fn load(path: &Path) -> Result<Option<Self>> {
        if !path.exists() {
            return Ok(None);
        }
        let text = std::fs::read_to_string(path)?;
        let items = serde_json::from_str(&text).map_err(|e| Error::InvalidInput(format!("fixtures: {e}")))?;
        Ok(Some(Fixtures { items }))
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent() {
            std::fs::create_dir_all(dir)?;
        }
        let mut s = serde_json::to_string_pretty(&self.items).expect("fixtures serialize");
        s.push('\n');
        std::fs::write(path, s)?;
        Ok(())
    }

    /// Merge values from `other`, keeping ours where both exist.
    pub fn fill_from(&mut self, other: &Fixtures) {
        for (k, v) in &other.items {
            self.items.entry(k.clone()).or_insert_with(|| v.clone());
        }
    }

    /// One check per item present in both; items computed in only one of
    /// the two runs are skipped.
    pub fn compare(&self, current: &Fixtures, checks: &mut CheckSet) {
        for (key, expected) in &self.items {
            if let Some(got) = current.items.get(key) {
                checks.expect_eq(
                    &format!("fixture.{key}"),
                    "matches the recorded regression value",
                    expected.clone(),
                    Source::Regression,
                    got.clone(),
                );
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Verdict;

    #[test]
    fn mismatch_is_named() {
        let mut old = Fixtures::default();
        old.insert("counts.3", [2, 28, 32]);
        old.insert("only.old", 1);
        let mut new = Fixtures::default();
        new.insert("counts.3", [2, 28, 33]);
        let mut c = CheckSet::new();
        old.compare(&new, &mut c);
        assert_eq!(c.records.len(), 1);
        assert_eq!(c.records[0].id, "fixture.counts.3");
        assert_eq!(c.records[0].verdict, Verdict::Fail);
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.json");
        assert!(Fixtures::load(&path).unwrap().is_none());
        let mut f = Fixtures::default();
        f.insert("a", vec![1, 2]);
        f.write(&path).unwrap();
        assert_eq!(Fixtures::load(&path).unwrap().unwrap(), f);
    }
}
