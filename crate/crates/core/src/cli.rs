//! Command-line front end.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 when every check
//! passes, 1 when a check fails, 2 for usage errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::asymptotics::{
    certify_upper_bound, log_spaced_grid, ratio_p_over_h, Verdict, DEFAULT_PRECISION_BITS,
};
use crate::counting::{
    group_order_b, proportion_p, proportion_p_minus, proportion_p_plus, BigNatural, Counter,
    DEFAULT_CROSS_CHECK_BOUND,
};
use crate::error::Error;
use crate::oracle::{
    brute_counts, verify_flip_bijection, verify_lemma, DEFAULT_BIJECTION_CAP, DEFAULT_COUNT_CAP,
    DEFAULT_LEMMA_CAP,
};
use crate::rational::Rounding;
use crate::sampling::{estimate_proportion, GroupSelector};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// |z| above this makes `sample` exit 1.
pub const SAMPLE_Z_LIMIT: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(
    name = "negcycles",
    version,
    about = "Counts, proportions and bounds for signed permutations with only negative cycles"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv, global = true)]
    pub format: OutputFormat,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact counts and proportions for n = 1..max-n
    Table(TableArgs),
    /// Compare brute-force enumeration with the closed forms
    Verify(VerifyArgs),
    /// Monte Carlo estimate of an only-negative proportion
    Sample(SampleArgs),
    /// Certify p(n) < (1 + 1/(22n)) / sqrt(pi n)
    Bound(BoundArgs),
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Largest rank in the table
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest rank for enumeration-vs-formula count checks (at most 8)
    #[arg(long, default_value_t = DEFAULT_COUNT_CAP as u32, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n_counts: u32,
    /// Largest rank for the fiber checks (at most 6); the flip-bijection
    /// check runs up to min(this, 5)
    #[arg(long, default_value_t = DEFAULT_LEMMA_CAP as u32, value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n_lemma: u32,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    /// Set to sample from: B, D or coset
    #[arg(long, default_value = "B", value_parser = parse_selector)]
    pub group: GroupSelector,
    /// Rank
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub n: u32,
    /// Number of draws
    #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Random seed
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    /// Explicit ranks, comma separated
    #[arg(long, value_delimiter = ',', num_args = 1.., conflicts_with = "max_n",
          value_parser = clap::value_parser!(u32).range(1..))]
    pub n: Vec<u32>,
    /// Largest rank of a log-spaced grid starting at 1
    #[arg(long, alias = "max", value_parser = clap::value_parser!(u32).range(1..))]
    pub max_n: Option<u32>,
    /// Number of grid points
    #[arg(long, default_value_t = 13, value_parser = clap::value_parser!(u32).range(1..))]
    pub log_steps: u32,
}

fn parse_selector(s: &str) -> Result<GroupSelector, String> {
    s.parse().map_err(|_| format!("expected B, D or coset, got {s:?}"))
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_PASS
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Table(a) => cmd_table(a, cli.format, out),
        Command::Verify(a) => cmd_verify(a, cli.format, out, err),
        Command::Sample(a) => cmd_sample(a, cli.format, out, err),
        Command::Bound(a) => cmd_bound(a, cli.format, out, err),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAIL
        }
    }
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidRank(_) | Error::CapExceeded { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Check(format!("writing output: {e}"))
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn emit<R: Serialize>(records: &[R], format: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)
                .map_err(|e| Failure::Check(e.to_string()))?;
            writeln!(out)?;
        }
        OutputFormat::Csv => out.write_all(&to_csv(records)?)?,
        OutputFormat::Pretty => {
            let csv = to_csv(records)?;
            let mut reader = csv::ReaderBuilder::new()
                .has_headers(false)
                .from_reader(csv.as_slice());
            let rows: Vec<Vec<String>> = reader
                .records()
                .map(|r| r.map(|r| r.iter().map(str::to_string).collect()))
                .collect::<Result<_, _>>()
                .map_err(|e| Failure::Check(e.to_string()))?;
            let columns = rows.first().map_or(0, Vec::len);
            let widths: Vec<usize> = (0..columns)
                .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
                .collect();
            for row in &rows {
                let cells: Vec<String> = row
                    .iter()
                    .zip(&widths)
                    .map(|(cell, &w)| " ".repeat(w - cell.len()) + cell)
                    .collect();
                writeln!(out, "{}", cells.join("  ").trim_end())?;
            }
        }
    }
    Ok(())
}

fn to_csv<R: Serialize>(records: &[R]) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).map_err(|e| Failure::Check(e.to_string()))?;
    }
    w.into_inner().map_err(|e| Failure::Check(e.to_string()))
}

#[derive(Debug, Serialize)]
struct TableRow {
    n: usize,
    #[serde(rename = "count_neg_B")]
    count_neg_b: String,
    #[serde(rename = "count_neg_D")]
    count_neg_d: String,
    count_neg_coset: String,
    #[serde(rename = "count_pos_B")]
    count_pos_b: String,
    p: String,
    p_plus: String,
    p_minus: String,
    p_dec: String,
    p_plus_dec: String,
    p_minus_dec: String,
}

fn cmd_table(args: &TableArgs, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let counter = Counter::new(DEFAULT_CROSS_CHECK_BOUND);
    let dec = |q: &crate::ExactRational| q.to_decimal(15, Rounding::Nearest);
    let rows = (1..=args.max_n as usize)
        .into_par_iter()
        .map(|n| -> crate::Result<TableRow> {
            let (p, pp, pm) = (proportion_p(n)?, proportion_p_plus(n)?, proportion_p_minus(n)?);
            Ok(TableRow {
                n,
                count_neg_b: counter.count_all_negative_b(n)?.to_string(),
                count_neg_d: counter.count_all_negative_d(n)?.to_string(),
                count_neg_coset: counter.count_all_negative_coset(n)?.to_string(),
                count_pos_b: counter.count_all_positive_b(n)?.to_string(),
                p_dec: dec(&p),
                p_plus_dec: dec(&pp),
                p_minus_dec: dec(&pm),
                p: p.to_string(),
                p_plus: pp.to_string(),
                p_minus: pm.to_string(),
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    emit(&rows, format, out)?;
    Ok(EXIT_PASS)
}

#[derive(Debug, Serialize)]
struct VerifyRecord {
    check: &'static str,
    n: usize,
    passed: bool,
    detail: String,
}

fn count_record(n: usize, counter: &Counter) -> crate::Result<VerifyRecord> {
    let brute = brute_counts(n)?;
    let expected: [(&str, &BigNatural, BigNatural); 5] = [
        ("total", &brute.total, group_order_b(n)?),
        ("neg_B", &brute.neg_b, counter.count_all_negative_b(n)?),
        ("neg_D", &brute.neg_d, counter.count_all_negative_d(n)?),
        ("neg_coset", &brute.neg_coset, counter.count_all_negative_coset(n)?),
        ("pos_B", &brute.pos_b, counter.count_all_positive_b(n)?),
    ];
    let mismatches: Vec<String> = expected
        .iter()
        .filter(|(_, got, want)| *got != want)
        .map(|(name, got, want)| format!("{name}: enumerated {got}, formula {want}"))
        .collect();
    let detail = if mismatches.is_empty() {
        expected
            .iter()
            .map(|(name, got, _)| format!("{name}={got}"))
            .collect::<Vec<_>>()
            .join(" ")
    } else {
        mismatches.join("; ")
    };
    Ok(VerifyRecord {
        check: "counts",
        n,
        passed: mismatches.is_empty(),
        detail,
    })
}

fn cmd_verify(
    args: &VerifyArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let (counts, lemma) = (args.max_n_counts as usize, args.max_n_lemma as usize);
    if counts > DEFAULT_COUNT_CAP {
        return Err(Failure::Usage(format!(
            "--max-n-counts {counts} exceeds the enumeration cap of {DEFAULT_COUNT_CAP}"
        )));
    }
    if lemma > DEFAULT_LEMMA_CAP {
        return Err(Failure::Usage(format!(
            "--max-n-lemma {lemma} exceeds the fiber-check cap of {DEFAULT_LEMMA_CAP}"
        )));
    }
    let bijection = lemma.min(DEFAULT_BIJECTION_CAP);
    let counter = Counter::new(DEFAULT_CROSS_CHECK_BOUND);
    let mut records = Vec::new();
    for n in 1..=counts.max(lemma) {
        if n <= counts {
            records.push(count_record(n, &counter)?);
        }
        if n <= lemma {
            let r = verify_lemma(n)?;
            records.push(VerifyRecord {
                check: "lemma",
                n,
                passed: r.passed,
                detail: r
                    .failure
                    .unwrap_or_else(|| format!("{} fibers checked", r.fibers_checked)),
            });
        }
        if n <= bijection {
            let r = verify_flip_bijection(n)?;
            records.push(VerifyRecord {
                check: "flip_bijection",
                n,
                passed: r.passed,
                detail: r
                    .failure
                    .unwrap_or_else(|| format!("{} class maps checked", r.maps_checked)),
            });
        }
    }
    emit(&records, format, out)?;
    let failed: Vec<_> = records.iter().filter(|r| !r.passed).collect();
    for r in &failed {
        writeln!(err, "FAIL {} n={}: {}", r.check, r.n, r.detail)?;
    }
    Ok(if failed.is_empty() { EXIT_PASS } else { EXIT_FAIL })
}

fn cmd_sample(
    args: &SampleArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let report = estimate_proportion(args.group, args.n as usize, args.trials, args.seed)?;
    emit(std::slice::from_ref(&report), format, out)?;
    match report.z_score {
        Some(z) if z.abs() <= SAMPLE_Z_LIMIT => Ok(EXIT_PASS),
        Some(z) => {
            writeln!(err, "z-score {z:.3} exceeds {SAMPLE_Z_LIMIT}")?;
            Ok(EXIT_FAIL)
        }
        None => {
            writeln!(
                err,
                "estimate {} is impossible for exact value {}",
                report.estimate, report.exact
            )?;
            Ok(EXIT_FAIL)
        }
    }
}

#[derive(Debug, Serialize)]
struct BoundRow {
    n: usize,
    p: String,
    p_dec: String,
    h_lower: String,
    h_upper: String,
    verdict: Verdict,
    precision_bits: u32,
    ratio_lower: String,
    ratio_upper: String,
}

fn cmd_bound(
    args: &BoundArgs,
    format: OutputFormat,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let grid: Vec<usize> = match (args.n.is_empty(), args.max_n) {
        (false, _) => args.n.iter().map(|&n| n as usize).collect(),
        (true, Some(max)) => log_spaced_grid(max as usize, args.log_steps as usize),
        (true, None) => return Err(Failure::Usage("give --n or --max-n".into())),
    };
    let rows = grid
        .par_iter()
        .map(|&n| -> crate::Result<BoundRow> {
            let record = certify_upper_bound(n)?.to_record();
            let (ratio_lower, ratio_upper) =
                ratio_p_over_h(n, DEFAULT_PRECISION_BITS)?.to_decimal_bounds(20);
            Ok(BoundRow {
                n,
                p: record.p,
                p_dec: record.p_dec,
                h_lower: record.h_lower,
                h_upper: record.h_upper,
                verdict: record.verdict,
                precision_bits: record.precision_bits,
                ratio_lower,
                ratio_upper,
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    emit(&rows, format, out)?;
    let open: Vec<_> = rows
        .iter()
        .filter(|r| r.verdict != Verdict::CertifiedTrue)
        .collect();
    for r in &open {
        writeln!(err, "n={}: verdict {}", r.n, r.verdict.as_str())?;
    }
    Ok(if open.is_empty() { EXIT_PASS } else { EXIT_FAIL })
}
