// SPDX-License-Identifier: Apache-2.0

//! The `quadrep` command-line tool.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a mismatch, 2 on any
//! usage or contract error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use quadrep::arith::{factorize, kronecker, tau};
use quadrep::classify::{is_cubic_residue_two, is_expressible_prime, prime_class};
use quadrep::count::x_count;
use quadrep::rings::{enumerate_x, form_params, SUPPORTED};
use quadrep::Error;

pub mod record;
pub mod verify;

use record::{ClassifyRecord, FactorRecord, OutputRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "quadrep",
    version,
    about = "Count representations of n by x^2 + a*y^2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Closed-form count of X(n, a), optionally with |Y(n, a)|
    Count {
        #[command(flatten)]
        query: Query,
        /// Also report |Y(n, a)|, the number of ring elements of norm n
        #[arg(long)]
        with_y: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        output: OutputArg,
    },
    /// List every solution of x^2 + a*y^2 = n by exhaustive search
    Solve {
        #[command(flatten)]
        query: Query,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Compare the closed forms against exhaustive search for all n <= n-max
    Verify {
        /// Comma-separated coefficients, or `all`
        #[arg(long, value_parser = parse_coefficients)]
        a: CoefficientList,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, env = "QUADREP_WORKERS", default_value_t = 1,
              value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Emit counts for every n in 1..=n-max
    Table {
        #[arg(long)]
        a: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Classify a prime relative to the coefficient a
    Classify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        a: u64,
        #[command(flatten)]
        output: OutputArg,
    },
    /// Print the prime factorization of n
    Factor {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[command(flatten)]
        output: OutputArg,
    },
}

#[derive(Debug, Args)]
struct Query {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
    #[arg(long)]
    a: u64,
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientList(pub Vec<u64>);

/// `all`, or a comma-separated list of supported coefficients. The result is
/// sorted and deduplicated.
pub fn parse_coefficients(s: &str) -> Result<CoefficientList, String> {
    if s.trim() == "all" {
        return Ok(CoefficientList(SUPPORTED.to_vec()));
    }
    let mut out = Vec::new();
    for part in s.split(',') {
        let a: u64 = part
            .trim()
            .parse()
            .map_err(|_| format!("`{part}` is not a coefficient"))?;
        form_params(a).map_err(|e| e.to_string())?;
        out.push(a);
    }
    out.sort_unstable();
    out.dedup();
    Ok(CoefficientList(out))
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self {
            code: EXIT_USAGE,
            message: e.to_string(),
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records serialize");
    s.push('\n');
    s
}

/// Runs the tool with `args` (including the program name) and returns the
/// exit code. Regular output goes to `out` unless `--output` names a file.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(rendered.as_bytes());
            } else {
                let _ = out.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    let (text, output, code) = match execute(cli.command, err) {
        Ok(done) => done,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    let written = match output {
        Some(path) => fs::write(&path, text.as_bytes())
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_USAGE;
    }
    code
}

type Done = (String, Option<PathBuf>, i32);

fn execute(command: Command, err: &mut dyn Write) -> Result<Done, Failure> {
    match command {
        Command::Count {
            query,
            with_y,
            format,
            output,
        } => {
            let report = x_count(query.n, query.a)?;
            let y = report.y_count;
            let mut rec = OutputRecord::from_report(report);
            if with_y {
                rec = rec.with_y(y);
            }
            let text = match format {
                Format::Json => json_line(&rec),
                Format::Csv => format!("{}\n{}\n", OutputRecord::csv_header(), rec.csv_row()),
            };
            Ok((text, output.output, EXIT_OK))
        }
        Command::Solve { query, output } => {
            let report = x_count(query.n, query.a)?;
            let solutions = enumerate_x(query.n, query.a)?;
            let oracle = solutions.len() as u64;
            let mut rec = OutputRecord::from_report(report).with_oracle(oracle, None);
            rec.solution_count = Some(oracle);
            rec.solutions = Some(solutions);
            Ok((json_line(&rec), output.output, EXIT_OK))
        }
        Command::Verify {
            a,
            n_max,
            workers,
            output,
        } => {
            let started = std::time::Instant::now();
            let outcome = verify::run_sweep(&a.0, n_max, workers as usize)?;
            let mut text = String::new();
            for rec in &outcome.mismatches {
                text.push_str(&json_line(rec));
            }
            text.push_str(&json_line(&outcome.summary));
            let _ = writeln!(
                err,
                "checked {} pairs, {} mismatches, {:.3} s",
                outcome.summary.checked,
                outcome.summary.mismatches,
                started.elapsed().as_secs_f64()
            );
            let code = if outcome.summary.mismatches == 0 {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            };
            Ok((text, output.output, code))
        }
        Command::Table {
            a,
            n_max,
            format,
            output,
        } => {
            form_params(a)?;
            let records = (1..=n_max)
                .map(|n| x_count(n, a).map(OutputRecord::from_report))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match format {
                Format::Csv => {
                    let mut s = String::with_capacity(32 * records.len());
                    s.push_str(OutputRecord::csv_header());
                    s.push('\n');
                    for rec in &records {
                        s.push_str(&rec.csv_row());
                        s.push('\n');
                    }
                    s
                }
                Format::Json => json_line(&records),
            };
            Ok((text, output.output, EXIT_OK))
        }
        Command::Classify { p, a, output } => {
            let params = form_params(a)?;
            let class = prime_class(p, a)?;
            let cubic_residue_two = if a == 27 && p % 3 == 1 {
                Some(is_cubic_residue_two(p)?)
            } else {
                None
            };
            let rec = ClassifyRecord {
                p,
                a,
                class,
                kronecker: kronecker(params.discriminant, p as i64),
                expressible: is_expressible_prime(p, a)?,
                cubic_residue_two,
            };
            Ok((json_line(&rec), output.output, EXIT_OK))
        }
        Command::Factor { n, output } => {
            let f = factorize(n)?;
            let rec = FactorRecord {
                n,
                tau: tau(&f),
                factorization: f,
            };
            Ok((json_line(&rec), output.output, EXIT_OK))
        }
    }
}
