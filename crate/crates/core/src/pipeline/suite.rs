//! The three pipelines in dependency order, with optional regression
//! fixtures.

use std::path::PathBuf;

use crate::data;
use crate::error::{Error, Result};
use crate::fixtures::Fixtures;
use crate::report::{CheckSet, Report, Source, Verdict};

use super::x035::Shape;
use super::{b5ns7, qz7, x035};

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub skip_lpoly17: bool,
    pub cache_dir: Option<PathBuf>,
    /// Fixture file to compare against (or write).
    pub fixtures: Option<PathBuf>,
    pub write_fixtures: bool,
    /// Octic of the genus-3 curve.
    pub octic: Vec<i64>,
    pub sextic: b5ns7::Input,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            skip_lpoly17: false,
            cache_dir: None,
            fixtures: None,
            write_fixtures: false,
            octic: data::octic(),
            sextic: b5ns7::Input::default(),
        }
    }
}

pub struct SuiteOutput {
    pub report: Report,
    /// Derived values of this run, in fixture form.
    pub fixtures: Fixtures,
}

/// x035 checks; derived values go to `fx`.
pub fn run_x035(octic: &[i64], checks: &mut CheckSet, fx: &mut Fixtures) {
    match x035::run(octic, checks) {
        Ok((_, census, records)) => {
            if !census.is_empty() {
                fx.insert("x035.dims", census.iter().map(|e| (e.a, e.b, e.dim)).collect::<Vec<_>>());
            }
            let cubics: Vec<_> = records.iter().filter(|r| r.shape == Shape::Irreducible).map(|r| (r.a, r.b, &r.m)).collect();
            if !cubics.is_empty() {
                fx.insert("x035.cubic_fields", cubics);
            }
        }
        Err(e) => checks.error("x035.verdict", "no totally real cubic point on X_0(35)", "PASS", Source::Published, &e),
    }
}

/// b5ns7 checks; derived values go to `fx`.
pub fn run_b5ns7(input: &b5ns7::Input, opts: &b5ns7::Options, checks: &mut CheckSet, fx: &mut Fixtures) {
    match b5ns7::run(input, opts, checks) {
        Ok(s) => {
            for z in &s.zeta {
                fx.insert(&format!("b5ns7.counts.{}", z.q), &z.counts);
                fx.insert(&format!("b5ns7.lpoly.{}", z.q), &z.lpoly);
            }
            if !s.hits.is_empty() {
                fx.insert("b5ns7.sieve_hits", &s.hits);
            }
        }
        Err(e) => checks.error("b5ns7.verdict", "X^(3)(Q) = {c0, c_inf}", "PASS", Source::Published, &e),
    }
}

pub fn run_qz7(checks: &mut CheckSet) {
    if let Err(e) = qz7::run(checks) {
        checks.error("qz7.verdict", "torsion of 15a1 and 15a3 over Q(zeta_7)^+", "PASS", Source::Published, &e);
    }
}

/// Compare against, or write, the fixture file.
pub fn apply_fixtures(opts: &SuiteOptions, current: &Fixtures, checks: &mut CheckSet) -> Result<()> {
    let Some(path) = &opts.fixtures else { return Ok(()) };
    let old = Fixtures::load(path)?;
    if opts.write_fixtures {
        if checks.records.iter().any(|r| r.verdict == Verdict::Fail || r.verdict == Verdict::Inconclusive) {
            return Err(Error::InvalidInput("fixtures are only written after a passing run".into()));
        }
        let mut out = current.clone();
        if let Some(old) = &old {
            out.fill_from(old);
        }
        out.write(path)?;
    } else if let Some(old) = old {
        old.compare(current, checks);
    }
    Ok(())
}

pub fn run_all(opts: &SuiteOptions) -> Result<SuiteOutput> {
    let mut checks = CheckSet::new();
    let mut fx = Fixtures::default();
    run_x035(&opts.octic, &mut checks, &mut fx);
    let b_opts = b5ns7::Options { skip_lpoly17: opts.skip_lpoly17, cache_dir: opts.cache_dir.clone() };
    run_b5ns7(&opts.sextic, &b_opts, &mut checks, &mut fx);
    run_qz7(&mut checks);
    apply_fixtures(opts, &fx, &mut checks)?;
    Ok(SuiteOutput { report: checks.into_report(), fixtures: fx })
}
