use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use lcsk_cli::bench::{self, BenchCmd};
use lcsk_cli::fasta::{load_dataset, resolve_sequence};
use lcsk_cli::matrix::{run_matrix, MatrixCmd};
use lcsk_cli::oracle_check::{run_oracle_check, OracleCheckCmd};
use lcsk_cli::pairwise::{run_pairwise, PairwiseCmd};
use lcsk_cli::report::{Format, Metric, Mode};
use lcsk_cli::CliError;
use lcsk_core::NormalizeOptions;

#[derive(Parser)]
#[command(
    name = "lcsk",
    version,
    about = "LCSk similarity and EDk edit distance over k-length substring matches"
)]
struct Cli {
    /// Fold ASCII letters to uppercase when loading sequences.
    #[arg(long, global = true)]
    uppercase: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// LCSk score of two sequences.
    Lcsk(PairArgs),
    /// EDk distance between two sequences.
    Edk(PairArgs),
    /// All-pairs score matrix of a FASTA dataset, as TSV.
    Matrix(MatrixArgs),
    /// Compare the dynamic programs with the exhaustive oracles.
    OracleCheck(OracleArgs),
    /// Time the score-only computation at increasing sizes.
    Bench(BenchArgs),
}

#[derive(Args)]
struct PairArgs {
    #[arg(long)]
    k: usize,
    /// First sequence, or @path to read it from a file.
    #[arg(long)]
    a: String,
    /// Second sequence, or @path to read it from a file.
    #[arg(long)]
    b: String,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
    /// Include the witness chain or edit script.
    #[arg(long)]
    traceback: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct MatrixArgs {
    #[arg(long, value_enum, default_value_t = Metric::Lcsk)]
    metric: Metric,
    #[arg(long)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
    #[arg(long)]
    input: PathBuf,
    /// Output path; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long, value_enum, default_value_t = Metric::Lcsk)]
    metric: Metric,
    /// Comma-separated list of k values.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    k: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
    #[arg(long, default_value_t = 8)]
    max_len: usize,
    #[arg(long, default_value = "AC")]
    alphabet: String,
    /// Random pairs per k; every pair is enumerated when omitted.
    #[arg(long)]
    trials: Option<usize>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum, default_value_t = Metric::Lcsk)]
    metric: Metric,
    #[arg(long, default_value_t = 2)]
    k: usize,
    #[arg(long, value_enum, default_value_t = Mode::Full)]
    mode: Mode,
    /// Comma-separated ascending sequence lengths.
    #[arg(long, value_delimiter = ',', default_value = "1000,2000,4000")]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    repeats: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

fn emit(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(CliError::Output)
}

fn pairwise(metric: Metric, args: PairArgs, options: NormalizeOptions) -> Result<i32, CliError> {
    let cmd = PairwiseCmd {
        metric,
        k: args.k,
        mode: args.mode,
        a: resolve_sequence(&args.a, "a", options)?,
        b: resolve_sequence(&args.b, "b", options)?,
        traceback: args.traceback,
        format: args.format,
    };
    let (_, text) = run_pairwise(&cmd)?;
    emit(&text)?;
    Ok(0)
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let options = NormalizeOptions {
        uppercase: cli.uppercase,
    };
    match cli.command {
        Command::Lcsk(args) => pairwise(Metric::Lcsk, args, options),
        Command::Edk(args) => pairwise(Metric::Edk, args, options),
        Command::Matrix(args) => {
            let dataset = load_dataset(&args.input, options)?;
            let cmd = MatrixCmd {
                metric: args.metric,
                k: args.k,
                mode: args.mode,
                input: &dataset,
                out: args.out.as_deref(),
                jobs: args.jobs,
            };
            let (_, tsv) = run_matrix(&cmd)?;
            if args.out.is_none() {
                emit(&tsv)?;
            }
            Ok(0)
        }
        Command::OracleCheck(args) => {
            let cmd = OracleCheckCmd {
                metric: args.metric,
                ks: args.k,
                mode: args.mode,
                max_len: args.max_len,
                alphabet: args.alphabet.into_bytes(),
                trials: args.trials,
                seed: args.seed,
            };
            let summary = run_oracle_check(&cmd)?;
            emit(&summary.render())?;
            Ok(summary.exit_code())
        }
        Command::Bench(args) => {
            let cmd = BenchCmd {
                metric: args.metric,
                k: args.k,
                mode: args.mode,
                sizes: args.sizes,
                repeats: args.repeats,
                seed: args.seed,
            };
            let rows = bench::run_bench(&cmd)?;
            emit(&bench::render(&cmd, &rows))?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return ExitCode::from(code);
        }
    };
    let code = run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(code as u8)
}
