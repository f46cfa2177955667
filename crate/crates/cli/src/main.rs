use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand};

use qsum_cli::report::{render, Format, Record, Summary};
use qsum_cli::sweep::{self, SweepConfig, Target};
use qsum_cli::table::{self, Example};
use qsum_cli::PrimeRange;
use qsum_core::sums::char_sum_with_budget;
use qsum_core::{FiniteField, Poly, DEFAULT_BUDGET};

#[derive(Parser)]
#[command(
    name = "qsum",
    version,
    about = "Quadratic character sums over finite fields"
)]
struct Cli {
    /// Largest field size the brute-force sums may enumerate.
    #[arg(long, global = true, env = "QSUM_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Σσ(f(x)) and the number of points on y^2 = f(x).
    Eval {
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Coefficients, leading first: "1,14,24,14,1".
        #[arg(long, allow_hyphen_values = true)]
        poly: String,
    },
    /// Check an identity on random parameters over a range of fields.
    Verify {
        #[arg(long)]
        identity: Target,
        #[arg(long, default_value = "5..50")]
        primes: PrimeRange,
        /// Extension degrees, comma separated.
        #[arg(long, value_delimiter = ',', default_value = "1")]
        k: Vec<usize>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Also write the report here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate a closed-form evaluation against brute force.
    Table {
        #[arg(long)]
        example: Example,
        #[arg(long, default_value = "5..500")]
        primes: PrimeRange,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        lambda: i64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(records: &[Record], format: Format, out: Option<&PathBuf>) -> anyhow::Result<Summary> {
    let bytes = render(records, format);
    std::io::stdout().write_all(&bytes)?;
    if let Some(path) = out {
        fs::write(path, &bytes).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(Summary::of(records))
}

fn report_summary(summary: &Summary, start: Instant) -> ExitCode {
    eprintln!(
        "{} cases: {} passed, {} failed ({:.2}s)",
        summary.total,
        summary.passed,
        summary.failed,
        start.elapsed().as_secs_f64()
    );
    if summary.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    let start = Instant::now();
    match cli.command {
        Command::Eval { p, k, poly } => {
            let field = FiniteField::new(p, k)?;
            let f = Poly::parse(&field, &poly)?;
            let s = char_sum_with_budget(&f, cli.budget)?;
            println!("field: {field}");
            println!("f = {f}");
            println!("S = {}", s.value);
            println!("points = {}", s.q as i64 + s.value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            identity,
            primes,
            k,
            trials,
            seed,
            format,
            out,
        } => {
            let config = SweepConfig {
                target: identity,
                primes,
                degrees: k,
                trials,
                seed,
                budget: cli.budget,
            };
            let records = sweep::run(&config)?;
            let summary = emit(&records, format, out.as_ref())?;
            Ok(report_summary(&summary, start))
        }
        Command::Table {
            example,
            primes,
            lambda,
            format,
            out,
        } => {
            let (records, skipped) = table::run(example, primes, lambda, cli.budget)?;
            if !skipped.is_empty() {
                eprintln!("closed form undefined, skipped p = {skipped:?}");
            }
            let summary = emit(&records, format, out.as_ref())?;
            Ok(report_summary(&summary, start))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
