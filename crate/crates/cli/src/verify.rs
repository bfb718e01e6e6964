use std::time::Instant;

use clap::{Args, ValueEnum};
use dynred::dra::{self, DraSuite};
use dynred::rmatrix::{self, RMatrixSuite};
use dynred::weyl::{self, CrossConstant, Statistics, WeylConfig, WeylSuite};
use dynred::{CheckReport, SuiteConfig, SuiteReport};

use crate::{guard, CliError, CliResult, Common, Format, Outcome};

const MAX_N: usize = 6;
const MAX_COPIES: usize = 4;
const MAX_POWER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Rmatrix,
    Weyl,
    Dra,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stats {
    Bosonic,
    Fermionic,
    Both,
}

impl Stats {
    fn expand(self) -> Vec<Statistics> {
        match self {
            Stats::Bosonic => vec![Statistics::Bosonic],
            Stats::Fermionic => vec![Statistics::Fermionic],
            Stats::Both => vec![Statistics::Bosonic, Statistics::Fermionic],
        }
    }

    fn name(self) -> &'static str {
        match self {
            Stats::Bosonic => "bosonic",
            Stats::Fermionic => "fermionic",
            Stats::Both => "both",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CrossConstantArg {
    /// Constant term only between equal copies.
    Kronecker,
    /// Constant term for every copy pair, as printed in the rank-two tables.
    AllCopies,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Which module's identities to check.
    #[arg(value_enum)]
    target: Target,
    /// Rank of gl(n).
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Copies of Diff_h(n) in the Weyl algebra (default 1).
    #[arg(long = "N")]
    weyl_copies: Option<usize>,
    /// Statistics of the Weyl algebra (default both).
    #[arg(long, value_enum)]
    stats: Option<Stats>,
    /// Constant term convention of the x-D exchange between copies (default
    /// kronecker).
    #[arg(long, value_enum)]
    cross_constant: Option<CrossConstantArg>,
    /// Braided copies of D(gl_n) (default 1).
    #[arg(long)]
    copies: Option<usize>,
    /// Restrict to one group of identities; depends on the target:
    /// rmatrix: involutive|dybe|skew|aux|trace|all;
    /// weyl: reflection|associativity|zhelobenko|variants|split|all;
    /// dra: reflection|associativity|central|coproduct|appendix|transforms|realization|all.
    #[arg(long)]
    suite: Option<String>,
    /// Highest power of L for the central-element checks (default 2).
    #[arg(long)]
    power: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    pub common: Common,
}

fn reject(present: bool, flag: &str, target: &str) -> CliResult<()> {
    if present {
        return Err(CliError::Usage(format!("{flag} does not apply to 'verify {target}'")));
    }
    Ok(())
}

fn prefixed(prefix: &str, reports: Vec<CheckReport>) -> Vec<CheckReport> {
    reports
        .into_iter()
        .map(|mut r| {
            r.identity = format!("{prefix}{}", r.identity);
            for f in &mut r.failures {
                f.identity = format!("{prefix}{}", f.identity);
            }
            r
        })
        .collect()
}

fn run_rmatrix(n: usize, suite: RMatrixSuite, prefix: &str) -> Vec<CheckReport> {
    prefixed(prefix, rmatrix::run_suite(n, suite))
}

fn run_weyl(
    n: usize,
    copies: usize,
    stats: Stats,
    cross: CrossConstant,
    suite: WeylSuite,
    prefix: &str,
) -> CliResult<Vec<CheckReport>> {
    let mut out = Vec::new();
    for s in stats.expand() {
        let mut cfg = WeylConfig::new(n, copies).with_cross_constant(cross);
        if s == Statistics::Fermionic {
            cfg = cfg.fermionic();
        }
        let tag = match s {
            Statistics::Bosonic => "bosonic/",
            Statistics::Fermionic => "fermionic/",
        };
        out.extend(prefixed(&format!("{prefix}{tag}"), weyl::run_suite(cfg, suite)?));
    }
    Ok(out)
}

fn run_dra(n: usize, copies: usize, suite: DraSuite, power: u32, prefix: &str) -> CliResult<Vec<CheckReport>> {
    Ok(prefixed(prefix, dra::run_suite(n, copies, suite, power)?))
}

pub fn run(args: &VerifyArgs) -> CliResult<Outcome> {
    let force = args.common.force;
    guard(force, "n", args.n, MAX_N)?;
    let target = args.target;
    let name = match target {
        Target::Rmatrix => "rmatrix",
        Target::Weyl => "weyl",
        Target::Dra => "dra",
        Target::All => "all",
    };
    let takes_weyl = matches!(target, Target::Weyl | Target::All);
    let takes_dra = matches!(target, Target::Dra | Target::All);
    reject(!takes_weyl && args.weyl_copies.is_some(), "--N", name)?;
    reject(!takes_weyl && args.stats.is_some(), "--stats", name)?;
    reject(!takes_weyl && args.cross_constant.is_some(), "--cross-constant", name)?;
    reject(!takes_dra && args.copies.is_some(), "--copies", name)?;
    reject(!takes_dra && args.power.is_some(), "--power", name)?;
    reject(target == Target::All && args.suite.is_some(), "--suite", name)?;

    let weyl_copies = args.weyl_copies.unwrap_or(1);
    let stats = args.stats.unwrap_or(Stats::Both);
    let cross = match args.cross_constant.unwrap_or(CrossConstantArg::Kronecker) {
        CrossConstantArg::Kronecker => CrossConstant::Kronecker,
        CrossConstantArg::AllCopies => CrossConstant::AllCopies,
    };
    let copies = args.copies.unwrap_or(1);
    let power = args.power.unwrap_or(2);
    if takes_weyl {
        guard(force, "N", weyl_copies, MAX_COPIES)?;
    }
    if takes_dra {
        guard(force, "copies", copies, MAX_COPIES)?;
        guard(force, "power", power as usize, MAX_POWER)?;
    }
    let suite = args.suite.as_deref().unwrap_or("all");

    let mut config = SuiteConfig { n: args.n, ..Default::default() };
    if takes_weyl {
        config.weyl_copies = Some(weyl_copies);
        config.statistics = Some(stats.name().to_string());
        if cross == CrossConstant::AllCopies {
            config.cross_constant = Some("all_copies".to_string());
        }
    }
    if takes_dra {
        config.copies = Some(copies);
        config.power = Some(power);
    }

    let start = Instant::now();
    let reports = match target {
        Target::Rmatrix => run_rmatrix(args.n, suite.parse()?, ""),
        Target::Weyl => run_weyl(args.n, weyl_copies, stats, cross, suite.parse()?, "")?,
        Target::Dra => run_dra(args.n, copies, suite.parse()?, power, "")?,
        Target::All => {
            let mut all = run_rmatrix(args.n, RMatrixSuite::All, "rmatrix/");
            all.extend(run_weyl(args.n, weyl_copies, stats, cross, WeylSuite::All, "weyl/")?);
            all.extend(run_dra(args.n, copies, DraSuite::All, power, "dra/")?);
            all
        }
    };
    let wall = (start.elapsed().as_secs_f64() * 1000.0).round() / 1000.0;
    let report = SuiteReport::new(name, config, &reports, wall);
    let text = match args.format {
        Format::Json => serde_json::to_string_pretty(&report)?,
        Format::Text => render_text(&report),
    };
    Ok(Outcome { text, passed: report.passed() })
}

fn render_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    for c in &report.checks {
        let verdict = if c.failed == 0 { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} {} ({} checked, {} failed)\n", c.identity, c.checked, c.failed));
        for note in &c.notes {
            out.push_str(&format!("     note: {note}\n"));
        }
    }
    for f in &report.failures {
        out.push_str(&format!("  {} {:?}: {} != {}\n", f.identity, f.indices, f.lhs, f.rhs));
    }
    let status = if report.passed() { "pass" } else { "fail" };
    out.push_str(&format!("{}: {status} in {:.3}s\n", report.suite, report.wall_time));
    out
}
