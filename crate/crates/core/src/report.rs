//! Verification report: one record per checked claim, canonical JSON output.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    /// A value stated in the published computation.
    Published,
    /// Follows from definitions or a one-line argument.
    Elementary,
    /// Recorded from an earlier verified run, or produced by a deliberate fault.
    Regression,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: Value,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    pub claim: String,
    pub expected: Expected,
    pub computed: Value,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub tool_version: String,
    pub checks: Vec<CheckRecord>,
    pub trusted_inputs: Vec<String>,
    pub verdict: Verdict,
    pub summary: String,
    /// Wall-clock milliseconds per check; written to a separate file so the
    /// report itself stays byte-identical across runs.
    #[serde(skip)]
    pub timings: BTreeMap<String, u64>,
}

/// Collects check records for one pipeline run.
#[derive(Clone, Debug, Default)]
pub struct CheckSet {
    pub records: Vec<CheckRecord>,
    pub timings: BTreeMap<String, u64>,
    pub trusted: Vec<String>,
}

impl CheckSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn record(
        &mut self,
        id: &str,
        claim: &str,
        expected: impl Serialize,
        source: Source,
        computed: impl Serialize,
        pass: bool,
    ) -> bool {
        self.push(id, claim, expected, source, computed, if pass { Verdict::Pass } else { Verdict::Fail });
        pass
    }

    pub fn push(&mut self, id: &str, claim: &str, expected: impl Serialize, source: Source, computed: impl Serialize, verdict: Verdict) {
        self.records.push(CheckRecord {
            id: id.into(),
            claim: claim.into(),
            expected: Expected { value: to_value(expected), source },
            computed: to_value(computed),
            verdict,
        });
    }

    /// Record equality of an expected and a computed value.
    pub fn expect_eq<T: Serialize + PartialEq>(&mut self, id: &str, claim: &str, expected: T, source: Source, computed: T) -> bool {
        let pass = expected == computed;
        self.record(id, claim, expected, source, computed, pass)
    }

    /// A check whose computation raised an error.
    pub fn error(&mut self, id: &str, claim: &str, expected: impl Serialize, source: Source, err: &crate::Error) {
        self.push(id, claim, expected, source, format!("error: {err}"), Verdict::Fail);
    }

    pub fn unchecked(&mut self, id: &str, claim: &str, expected: impl Serialize, source: Source, why: &str) {
        self.push(id, claim, expected, source, format!("not run: {why}"), Verdict::Unchecked);
    }

    pub fn trust(&mut self, input: &str) {
        self.trusted.push(input.into());
    }

    pub fn timed<T>(&mut self, id: &str, f: impl FnOnce(&mut Self) -> T) -> T {
        let start = Instant::now();
        let out = f(self);
        self.timings.insert(id.into(), start.elapsed().as_millis() as u64);
        out
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(|r| r.verdict == Verdict::Pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    pub fn extend(&mut self, other: CheckSet) {
        self.records.extend(other.records);
        self.timings.extend(other.timings);
        self.trusted.extend(other.trusted);
    }

    pub fn into_report(self) -> Report {
        let unchecked = self.records.iter().filter(|r| r.verdict == Verdict::Unchecked).count();
        let failed = self.records.iter().filter(|r| r.verdict == Verdict::Fail).count();
        let inconclusive = self.records.iter().filter(|r| r.verdict == Verdict::Inconclusive).count();
        let verdict = if failed > 0 {
            Verdict::Fail
        } else if inconclusive > 0 {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        let mut summary = match verdict {
            Verdict::Pass => "PASS".to_string(),
            Verdict::Fail => format!("FAIL ({failed} failed)"),
            _ => format!("INCONCLUSIVE ({inconclusive} inconclusive)"),
        };
        if unchecked > 0 && verdict == Verdict::Pass {
            summary = format!("PASS with {unchecked} unchecked");
        }
        Report {
            tool_version: env!("CARGO_PKG_VERSION").into(),
            checks: self.records,
            trusted_inputs: self.trusted,
            verdict,
            summary,
            timings: self.timings,
        }
    }
}

impl CheckRecord {
    /// Compact JSON of the computed value, cut to `width` characters.
    pub fn computed_short(&self, width: usize) -> String {
        let s = self.computed.to_string();
        match s.char_indices().nth(width.saturating_sub(3)) {
            Some((i, _)) if s.chars().count() > width => format!("{}...", &s[..i]),
            _ => s,
        }
    }
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("report values serialize")
}

impl Report {
    /// First failing check, if any.
    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.checks.iter().find(|r| r.verdict == Verdict::Fail)
    }

    /// Canonical JSON: keys sorted (serde_json maps are ordered), two-space
    /// indentation, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| crate::Error::InvalidInput(format!("report: {e}")))
    }

    /// Write the report and a `<name>.timings.json` sidecar.
    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_canonical_json())?;
        let mut side = path.as_os_str().to_owned();
        side.push(".timings.json");
        let t = serde_json::to_string_pretty(&self.timings).expect("timings serialize");
        std::fs::write(Path::new(&side), t + "\n")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut c = CheckSet::new();
        c.expect_eq("a.count", "count matches", 44, Source::Published, 44);
        c.unchecked("b.slow", "slow check", 1, Source::Published, "skipped");
        c.trust("rank zero");
        c.into_report()
    }

    #[test]
    fn summary_counts_unchecked() {
        let r = sample();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.summary, "PASS with 1 unchecked");
    }

    #[test]
    fn json_round_trip_is_stable() {
        let r = sample();
        let s = r.to_canonical_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back.to_canonical_json(), s);
        assert!(s.contains("\"source\": \"published\""));
    }
}
