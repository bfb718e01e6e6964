//! `dynred`: run the verification suites, print relation catalogues, normal
//! forms and central elements.

mod commands;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact verification of dynamical R-matrix identities, the h-deformed Weyl
/// algebra and the diagonal reduction algebra of gl(n).
///
/// Exit codes: 0 when every identity holds, 1 when some identity fails or a
/// computation breaks down, 2 for usage and parse errors.
///
/// The environment variable DYNRED_COEFF_CACHE_ENTRIES caps the number of
/// cached coefficient-bearing entries (shifted rule bodies, memoized normal
/// forms) kept by the rewriting engines.
#[derive(Debug, Parser)]
#[command(name = "dynred", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite and emit a JSON report.
    Verify(verify::VerifyArgs),
    /// Print the rewrite rules of D(gl_n).
    Relations(RelationsArgs),
    /// Print the central element Tr(L^power Q-) in normal form.
    Central(CentralArgs),
    /// Normal order an expression.
    NormalForm(NormalFormArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GeneratorSet {
    L,
    S,
}

/// Flags shared by every subcommand.
#[derive(Clone, Debug, Args)]
struct Common {
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for independent identity components (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Lift the size guardrails (n <= 6, N <= 4, copies <= 4, power <= 6).
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Debug, Args)]
struct RelationsArgs {
    #[arg(long)]
    n: usize,
    /// Generating matrix the rules are written in.
    #[arg(long, value_enum, default_value = "L", ignore_case = true)]
    generators: GeneratorSet,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct CentralArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    power: u32,
    /// Also check that the element commutes with every generator (for L and
    /// for L' = H - L).
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum AlgebraKind {
    Weyl,
    Dra,
}

#[derive(Debug, Args)]
struct NormalFormArgs {
    #[arg(long)]
    n: usize,
    /// Number of copies of Diff_h(n) (Weyl algebra) or braided copies of L.
    #[arg(long = "N", default_value_t = 1)]
    copies: usize,
    #[arg(long, value_enum, default_value = "bosonic")]
    stats: verify::Stats,
    /// Which algebra the expression lives in.
    #[arg(long, value_enum, default_value = "weyl")]
    algebra: AlgebraKind,
    /// For example "D[1,1]*x[1,1]" or "L[1,1]*L[1,2]".
    #[arg(long)]
    expr: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] dynred::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use dynred::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Lib(
                E::Parse { .. }
                | E::Invalid(_)
                | E::IndexOutOfRange { .. }
                | E::UnsupportedRank(_)
                | E::ConfigMismatch(_)
                | E::DivisionByZero,
            ) => 2,
            _ => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a command produced: the text to emit and whether all checks passed.
struct Outcome {
    text: String,
    passed: bool,
}

fn guard(force: bool, what: &str, value: usize, max: usize) -> CliResult<()> {
    if value == 0 {
        return Err(CliError::Usage(format!("{what} must be at least 1")));
    }
    if value > max && !force {
        return Err(CliError::Usage(format!(
            "{what} = {value} exceeds the guardrail {max}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn init_pool(jobs: Option<usize>) -> CliResult<()> {
    if let Some(j) = jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<(Outcome, Option<PathBuf>)> {
    let common = match &cli.command {
        Command::Verify(a) => a.common.clone(),
        Command::Relations(a) => a.common.clone(),
        Command::Central(a) => a.common.clone(),
        Command::NormalForm(a) => a.common.clone(),
    };
    init_pool(common.jobs)?;
    let outcome = match cli.command {
        Command::Verify(args) => verify::run(&args)?,
        Command::Relations(args) => commands::relations(&args)?,
        Command::Central(args) => commands::central(&args)?,
        Command::NormalForm(args) => commands::normal_form(&args)?,
    };
    Ok((outcome, common.out))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((outcome, out)) => {
            let mut text = outcome.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            let written = match out {
                Some(path) => std::fs::write(&path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if outcome.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
