use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use modcurve::curve::cache::CountCache;
use modcurve::fixtures::{self, Fixtures};
use modcurve::pipeline::b5ns7::{self, Step};
use modcurve::pipeline::suite::{self, SuiteOptions};
use modcurve::report::{CheckSet, Report, Verdict};

#[derive(Parser)]
#[command(name = "modcurve", version, about = "Exact verification of cubic points on X_0(35) and X(b5, ns7)")]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// The genus-3 curve X_0(35).
    X035 {
        #[command(subcommand)]
        sub: X035Cmd,
    },
    /// The genus-6 curve X(b5, ns7).
    B5ns7 {
        #[command(subcommand)]
        sub: B5Cmd,
    },
    /// Torsion of 15a1 and 15a3.
    Qz7 {
        #[command(subcommand)]
        sub: Qz7Cmd,
    },
    /// Every pipeline, in dependency order.
    All(AllArgs),
}

#[derive(Subcommand)]
enum X035Cmd {
    Verify {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args, Clone)]
struct CacheArg {
    /// Directory for cached point counts (overrides MODCURVE_CACHE_DIR).
    #[arg(long)]
    cache: Option<PathBuf>,
}

impl CacheArg {
    fn dir(&self) -> Option<PathBuf> {
        self.cache.clone().or_else(CountCache::env_dir)
    }
}

#[derive(Subcommand)]
enum B5Cmd {
    ModelCheck,
    Cusps,
    /// Point counts and the L-polynomial at a prime.
    Lpoly {
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = 6)]
        max_k: usize,
        #[command(flatten)]
        cache: CacheArg,
    },
    Jacobian,
    Sieve,
    FormalImmersion,
    /// The whole pipeline for this curve.
    Verdict {
        #[arg(long)]
        skip_lpoly17: bool,
        #[command(flatten)]
        cache: CacheArg,
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Qz7Cmd {
    Torsion {
        #[arg(long)]
        json: Option<PathBuf>,
    },
}

#[derive(Args)]
struct AllArgs {
    /// Skip the zeta function at 17 (leaves one check unchecked).
    #[arg(long)]
    skip_lpoly17: bool,
    #[command(flatten)]
    cache: CacheArg,
    #[arg(long)]
    json: Option<PathBuf>,
    /// Regression fixture file.
    #[arg(long, default_value = fixtures::DEFAULT_PATH)]
    fixtures: PathBuf,
    /// Record this run's derived values in the fixture file.
    #[arg(long)]
    write_fixtures: bool,
}

fn print_report(r: &Report) {
    for c in &r.checks {
        let tag = match c.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Unchecked => "UNCHECKED",
        };
        println!("{tag:<12} {:<36} {}", c.id, c.computed_short(72));
    }
    if let Some(f) = r.first_failure() {
        println!("first failing check: {}", f.id);
    }
    println!("{}", r.summary);
}

fn finish(report: Report, json: Option<&Path>) -> ExitCode {
    print_report(&report);
    if let Some(path) = json {
        if let Err(e) = report.write(path) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if report.verdict == Verdict::Pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn step(s: Step) -> ExitCode {
    let mut c = CheckSet::new();
    if let Err(e) = b5ns7::run_step(s, &b5ns7::Input::default(), &b5ns7::Options::default(), &mut c) {
        c.error("b5ns7.error", "step completed", "no error", modcurve::report::Source::Elementary, &e);
    }
    finish(c.into_report(), None)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match cli.cmd {
        Cmd::X035 { sub: X035Cmd::Verify { json } } => {
            let mut c = CheckSet::new();
            suite::run_x035(&modcurve::data::octic(), &mut c, &mut Fixtures::default());
            finish(c.into_report(), json.as_deref())
        }
        Cmd::B5ns7 { sub } => match sub {
            B5Cmd::ModelCheck => step(Step::Model),
            B5Cmd::Cusps => step(Step::Cusps),
            B5Cmd::Jacobian => step(Step::Jacobian),
            B5Cmd::Sieve => step(Step::Sieve),
            B5Cmd::FormalImmersion => step(Step::FormalImmersion),
            B5Cmd::Lpoly { prime, max_k, cache } => {
                let mut c = CheckSet::new();
                let opts = b5ns7::Options { skip_lpoly17: false, cache_dir: cache.dir() };
                if let Err(e) = b5ns7::lpoly(prime, max_k, &b5ns7::Input::default(), &opts, &mut c) {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
                finish(c.into_report(), None)
            }
            B5Cmd::Verdict { skip_lpoly17, cache, json } => {
                let mut c = CheckSet::new();
                let opts = b5ns7::Options { skip_lpoly17, cache_dir: cache.dir() };
                suite::run_b5ns7(&b5ns7::Input::default(), &opts, &mut c, &mut Fixtures::default());
                finish(c.into_report(), json.as_deref())
            }
        },
        Cmd::Qz7 { sub: Qz7Cmd::Torsion { json } } => {
            let mut c = CheckSet::new();
            suite::run_qz7(&mut c);
            finish(c.into_report(), json.as_deref())
        }
        Cmd::All(a) => {
            let opts = SuiteOptions {
                skip_lpoly17: a.skip_lpoly17,
                cache_dir: a.cache.dir(),
                fixtures: Some(a.fixtures),
                write_fixtures: a.write_fixtures,
                ..SuiteOptions::default()
            };
            match suite::run_all(&opts) {
                Ok(out) => finish(out.report, a.json.as_deref()),
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(2)
                }
            }
        }
    }
}
