//! `smobius`: Möbius functions of numerical semigroups from the command line.

mod input;
mod output;

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};

use smobius_core::harness::suites::{run_suite, Bound, Suite};
use smobius_core::harness::{
    applicability, auto_method, crosscheck_parallel, mu_table_rows, Grid, MuTable,
};
use smobius_core::{Evaluator, EvenCaseParams, Method, MobiusError, Mu};

use input::{Input, SemigroupArgs};
use output::{render_records, Format, OutputRecord};

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "smobius",
    version,
    about = "Möbius functions of numerical semigroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute mu_S(x) at one point
    Compute {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        #[arg(long, allow_negative_numbers = true)]
        x: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute mu_S(x) for every x in an inclusive range
    Range {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        #[arg(long, allow_negative_numbers = true)]
        from: i64,
        #[arg(long, allow_negative_numbers = true)]
        to: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Table of mu_S([x0,0,x2]) for S = <2q, 2q+d, 2q+2d>
    Table {
        #[arg(long)]
        q: i64,
        #[arg(long)]
        d: i64,
        /// Number of rows (x0 = 0..rows); defaults to 3q+3d+3
        #[arg(long)]
        rows: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Apery set of S with respect to m
    Apery {
        #[command(flatten)]
        semigroup: SemigroupArgs,
        /// Modulus; defaults to the multiplicity
        #[arg(long = "mod")]
        modulus: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification suites
    Check {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, value_enum, default_value_t = BoundArg::Full)]
        bound: BoundArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Auto,
    Chains,
    Recursive,
    Deddens,
    Arith,
    Even,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SuiteArg {
    All,
    Table,
    Deddens,
    Arith,
    Even,
    Defs,
    Shifts,
    Repr,
    Apery,
    Invariants,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BoundArg {
    Tiny,
    Full,
}

enum Failure {
    Core(MobiusError),
    Verify,
}

impl From<MobiusError> for Failure {
    fn from(e: MobiusError) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let mut stdout = std::io::stdout().lock();
    // a closed pipe is not worth a panic
    let _ = stdout
        .write_all(out.as_bytes())
        .and_then(|_| stdout.flush());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                MobiusError::Overflow => EXIT_OVERFLOW,
                _ => EXIT_USAGE,
            })
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Compute {
            semigroup,
            x,
            method,
            format,
        } => {
            let input = semigroup.resolve()?;
            let method = choose_method(&input, method)?;
            let mu = Evaluator::new(&input.semigroup, method)?.mobius(x)?;
            let rep = match input.arithmetic {
                Some(p) if p.k() == 2 => Some(p.decompose(x)?),
                _ => None,
            };
            out.push_str(&render_records(
                &[OutputRecord::new(x, mu, method, rep)],
                format,
            ));
        }
        Command::Range {
            semigroup,
            from,
            to,
            method,
            format,
            jobs,
        } => {
            if from > to {
                return Err(MobiusError::InvalidParameter(format!(
                    "--from {from} exceeds --to {to}"
                ))
                .into());
            }
            let input = semigroup.resolve()?;
            let method = choose_method(&input, method)?;
            let records = range(&input, method, from, to, jobs)?;
            out.push_str(&render_records(&records, format));
        }
        Command::Table {
            q,
            d,
            rows,
            format,
            jobs,
        } => {
            let p = EvenCaseParams::new(q, d)?;
            let rows = rows.unwrap_or(3 * (q + d) + 3);
            if rows < 1 {
                return Err(MobiusError::InvalidParameter(format!(
                    "--rows {rows} must be positive"
                ))
                .into());
            }
            let table = table(&p, rows, jobs)?;
            match format {
                Format::Csv => out.push_str(&table.to_csv()),
                Format::Text => out.push_str(&table.to_text()),
                Format::Json => {
                    out.push_str(&serde_json::to_string(&table).expect("table serializes"));
                    out.push('\n');
                }
            }
        }
        Command::Apery {
            semigroup,
            modulus,
            format,
        } => {
            let input = semigroup.resolve()?;
            let m = modulus.unwrap_or_else(|| input.semigroup.multiplicity());
            let elements = input.semigroup.apery_set(m)?;
            // the closed formula is indexed by i when the modulus is a
            let pairs = match input.arithmetic {
                Some(p) if input.explicit_arith && p.a() == m => Some(p.apery()?),
                _ => None,
            };
            apery_output(out, m, &elements, pairs.as_deref(), format);
        }
        Command::Check { suite, bound, jobs } => {
            let bound = match bound {
                BoundArg::Tiny => Bound::Tiny,
                BoundArg::Full => Bound::Full,
            };
            let suites: Vec<Suite> = match suite {
                SuiteArg::All => Suite::ALL.to_vec(),
                SuiteArg::Table => vec![Suite::Table],
                SuiteArg::Deddens => vec![Suite::Deddens],
                SuiteArg::Arith => vec![Suite::Arith],
                SuiteArg::Even => vec![Suite::Even],
                SuiteArg::Defs => vec![Suite::Defs],
                SuiteArg::Shifts => vec![Suite::Shifts],
                SuiteArg::Repr => vec![Suite::Repr],
                SuiteArg::Apery => vec![Suite::Apery],
                SuiteArg::Invariants => vec![Suite::Invariants],
            };
            let mut all_passed = true;
            for s in suites {
                let outcome = run_suite(s, bound, jobs)?;
                writeln!(
                    out,
                    "{} {} ({} checks, {} failures, {:.3}s)",
                    if outcome.passed() { "PASS" } else { "FAIL" },
                    s,
                    outcome.checks,
                    outcome.failure_count,
                    outcome.elapsed.as_secs_f64()
                )
                .unwrap();
                for f in &outcome.failures {
                    writeln!(out, "  {f}").unwrap();
                }
                all_passed &= outcome.passed();
            }
            if !all_passed {
                return Err(Failure::Verify);
            }
        }
    }
    Ok(())
}

fn choose_method(input: &Input, method: MethodArg) -> Result<Method, MobiusError> {
    let method = match method {
        MethodArg::Auto => auto_method(&input.semigroup),
        MethodArg::Chains => Method::Chains,
        MethodArg::Recursive => Method::Recursive,
        MethodArg::Deddens => Method::Deddens,
        MethodArg::Arith => Method::Arithmetic,
        MethodArg::Even => Method::EvenClosed,
    };
    applicability(&input.semigroup, method)?;
    Ok(method)
}

fn range(
    input: &Input,
    method: Method,
    from: i64,
    to: i64,
    jobs: usize,
) -> Result<Vec<OutputRecord>, MobiusError> {
    let jobs = jobs.max(1) as i64;
    let len = to - from + 1;
    let chunk = (len + jobs - 1) / jobs;
    let grids: Vec<Grid> = (0..jobs)
        .map(|j| (from + j * chunk, (from + (j + 1) * chunk - 1).min(to)))
        .filter(|(lo, hi)| lo <= hi)
        .map(|(lo, hi)| Grid::new(input.semigroup.clone(), lo, hi, &[method]))
        .collect();
    let reports = crosscheck_parallel(&grids, jobs as usize)?;
    Ok(reports
        .into_iter()
        .map(|r| {
            let (_, mu) = r.values()[0];
            OutputRecord::new(r.x, mu, method, None)
        })
        .collect())
}

fn table(p: &EvenCaseParams, rows: i64, jobs: usize) -> Result<MuTable, MobiusError> {
    let jobs = jobs.max(1) as i64;
    let chunk = (rows + jobs - 1) / jobs;
    let parts: Vec<Result<Vec<Vec<Mu>>, MobiusError>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|j| (j * chunk, ((j + 1) * chunk).min(rows)))
            .filter(|(lo, hi)| lo < hi)
            .map(|(lo, hi)| scope.spawn(move || mu_table_rows(p, lo, hi - 1)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table worker panicked"))
            .collect()
    });
    let mut all = Vec::with_capacity(rows as usize);
    for part in parts {
        all.extend(part?);
    }
    Ok(MuTable {
        q: p.q(),
        d: p.d(),
        rows: all,
    })
}

fn apery_output(out: &mut String, m: i64, elements: &[i64], pairs: Option<&[i64]>, format: Format) {
    match format {
        Format::Json => {
            let mut v = serde_json::json!({ "modulus": m, "elements": elements });
            if let Some(pairs) = pairs {
                let pairs: Vec<[i64; 2]> = pairs
                    .iter()
                    .enumerate()
                    .map(|(i, &w)| [i as i64, w])
                    .collect();
                v["pairs"] = serde_json::json!(pairs);
            }
            out.push_str(&v.to_string());
            out.push('\n');
        }
        Format::Text | Format::Csv => {
            for e in elements {
                writeln!(out, "{e}").unwrap();
            }
            if let Some(pairs) = pairs {
                out.push_str("i,element\n");
                for (i, w) in pairs.iter().enumerate() {
                    writeln!(out, "{i},{w}").unwrap();
                }
            }
        }
    }
}
