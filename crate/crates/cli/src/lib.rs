//! Command-line surface for `seidel-core`.
//!
//! Exit codes: 0 on success, 1 when a check fails, 2 on usage or
//! precondition errors. Every sequence value in JSON or CSV output is a
//! decimal string; polynomials are ascending coefficient arrays.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use seidel_core::identities;
use seidel_core::series::{DEFAULT_ORDER, MIN_ORDER};
use seidel_core::{
    run_series_checks, EsMatrix, IdentityCheck, IntPolynomial, SeqKind, SeriesCheckResult, Term,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "seidel",
    version,
    about = "Euler-Seidel matrices, Bell and Fubini numbers, and exact identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the first terms of a sequence.
    Seq(SeqArgs),
    /// Same as `seq`, restricted to polynomial sequences.
    Poly(PolyArgs),
    /// Print the Euler-Seidel triangle seeded by a sequence.
    Esmatrix(MatrixArgs),
    /// Run one identity check, or `all` of them.
    Check(CheckArgs),
    /// Run the generating-function checks.
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Stirling2,
    Bell,
    Bellpoly,
    Fubini,
    Fubinipoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    /// Exponential (Bell) polynomials.
    #[value(alias = "bellpoly")]
    Bell,
    /// Geometric (Fubini) polynomials.
    #[value(alias = "fubinipoly")]
    Fubini,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FormatArgs {
    /// Emit a single JSON document.
    #[arg(long, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV with a header row.
    #[arg(long)]
    pub csv: bool,
}

impl FormatArgs {
    pub fn format(self) -> OutputFormat {
        match (self.json, self.csv) {
            (true, _) => OutputFormat::Json,
            (_, true) => OutputFormat::Csv,
            _ => OutputFormat::Table,
        }
    }
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    pub kind: Kind,
    /// Number of terms, starting at index 0.
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    /// Stirling column (required for `stirling2`).
    #[arg(long)]
    pub m: Option<usize>,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    pub kind: PolyKind,
    #[arg(long, default_value_t = 10)]
    pub count: usize,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    pub kind: Kind,
    /// Length of the initial sequence (number of rows).
    #[arg(long, default_value_t = 6)]
    pub size: usize,
    /// Stirling column (required for `stirling2`).
    #[arg(long)]
    pub m: Option<usize>,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Identity name, or `all`.
    pub target: String,
    #[arg(long = "max-n", default_value_t = 40)]
    pub max_n: usize,
    #[command(flatten)]
    pub format: FormatArgs,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Truncation order.
    #[arg(long, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    #[command(flatten)]
    pub format: FormatArgs,
}

/// Errors that end the process with [`EXIT_USAGE`].
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn seq_kind(kind: Kind, m: Option<usize>) -> Result<SeqKind, CliError> {
    Ok(match kind {
        Kind::Stirling2 => {
            SeqKind::Stirling2(m.ok_or_else(|| usage("stirling2 requires --m <M>"))?)
        }
        Kind::Bell => SeqKind::BellNumber,
        Kind::Bellpoly => SeqKind::BellPoly,
        Kind::Fubini => SeqKind::FubiniNumber,
        Kind::Fubinipoly => SeqKind::FubiniPoly,
    })
}

fn kind_name(kind: SeqKind) -> &'static str {
    match kind {
        SeqKind::Stirling2(_) => "stirling2",
        SeqKind::BellNumber => "bell",
        SeqKind::BellPoly => "bellpoly",
        SeqKind::FubiniNumber => "fubini",
        SeqKind::FubiniPoly => "fubinipoly",
    }
}

/// Runs a parsed command, writing its report to `out`. Returns the exit
/// code on success.
pub fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8, CliError> {
    match &cli.command {
        Command::Seq(args) => {
            let kind = seq_kind(args.kind, args.m)?;
            cmd_seq(kind, args.count, args.format.format(), out)
        }
        Command::Poly(args) => {
            let kind = match args.kind {
                PolyKind::Bell => SeqKind::BellPoly,
                PolyKind::Fubini => SeqKind::FubiniPoly,
            };
            cmd_seq(kind, args.count, args.format.format(), out)
        }
        Command::Esmatrix(args) => {
            let kind = seq_kind(args.kind, args.m)?;
            cmd_esmatrix(kind, args.size, args.format.format(), out)
        }
        Command::Check(args) => cmd_check(&args.target, args.max_n, args.format.format(), out),
        Command::Series(args) => cmd_series(args.order, args.format.format(), out),
    }
}

fn poly_cell(p: &IntPolynomial) -> String {
    p.coeffs()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

fn term_cell(t: &Term) -> String {
    match t {
        Term::Number(v) => v.to_string(),
        Term::Poly(p) => poly_cell(p),
    }
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

pub fn cmd_seq(
    kind: SeqKind,
    count: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if count == 0 {
        return Err(usage("--count must be at least 1"));
    }
    let terms = kind.terms(count);
    match format {
        OutputFormat::Json => write_json(out, &terms)?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "value"])?;
            for (n, t) in terms.iter().enumerate() {
                w.write_record([n.to_string(), term_cell(t)])?;
            }
            w.flush()?;
        }
        OutputFormat::Table if kind.is_polynomial() => {
            for (n, t) in terms.iter().enumerate() {
                writeln!(out, "{n}: {t}")?;
            }
        }
        OutputFormat::Table => {
            let line: Vec<String> = terms.iter().map(ToString::to_string).collect();
            writeln!(out, "{}", line.join(" "))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct MatrixDoc<'a> {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<usize>,
    size: usize,
    rows: &'a [Vec<Term>],
}

pub fn cmd_esmatrix(
    kind: SeqKind,
    size: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    if size == 0 {
        return Err(usage("--size must be at least 1"));
    }
    let rows: Vec<Vec<Term>> = if kind.is_polynomial() {
        let polys = kind.polynomials(size).expect("polynomial kind");
        let m = EsMatrix::build(polys).map_err(|e| usage(e.to_string()))?;
        m.rows()
            .iter()
            .map(|r| r.iter().cloned().map(Term::Poly).collect())
            .collect()
    } else {
        let nums = kind.numbers(size).expect("number kind");
        let m = EsMatrix::build(nums).map_err(|e| usage(e.to_string()))?;
        m.rows()
            .iter()
            .map(|r| r.iter().cloned().map(Term::Number).collect())
            .collect()
    };
    match format {
        OutputFormat::Json => {
            let m = match kind {
                SeqKind::Stirling2(m) => Some(m),
                _ => None,
            };
            write_json(
                out,
                &MatrixDoc {
                    kind: kind_name(kind),
                    m,
                    size,
                    rows: &rows,
                },
            )?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["k", "n", "value"])?;
            for (k, row) in rows.iter().enumerate() {
                for (n, t) in row.iter().enumerate() {
                    w.write_record([k.to_string(), n.to_string(), term_cell(t)])?;
                }
            }
            w.flush()?;
        }
        OutputFormat::Table => {
            let sep = if kind.is_polynomial() { " | " } else { " " };
            for row in &rows {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", cells.join(sep))?;
            }
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct CheckDoc<'a> {
    results: &'a [IdentityCheck],
}

pub fn cmd_check(
    target: &str,
    max_n: usize,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<u8, CliError> {
    let results = if target == "all" {
        identities::check_all(max_n)
    } else {
        identities::check(target, max_n).map(|r| vec![r])
    }
    .map_err(|e| usage(e.to_string()))?;

    match format {
        OutputFormat::Json => write_json(out, &CheckDoc { results: &results })?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "eq", "max_n", "status", "n", "m", "lhs", "rhs"])?;
            for r in &results {
                let (n, m, lhs, rhs) = match &r.counterexample {
                    Some(c) => (
                        c.n.to_string(),
                        c.m.map(|m| m.to_string()).unwrap_or_default(),
                        term_cell(&c.lhs),
                        term_cell(&c.rhs),
                    ),
                    None => Default::default(),
                };
                w.write_record([
                    r.name.to_string(),
                    r.eq_label.to_string(),
                    r.max_n.to_string(),
                    r.status.to_string(),
                    n,
                    m,
                    lhs,
                    rhs,
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Table => {
            for r in &results {
                write!(
                    out,
                    "{:<28} ({:>3})  max_n={:<4} {}",
                    r.name, r.eq_label, r.max_n, r.status
                )?;
                if let Some(c) = &r.counterexample {
                    write!(out, "  n={}", c.n)?;
                    if let Some(m) = c.m {
                        write!(out, " m={m}")?;
                    }
                    write!(out, "  lhs={}  rhs={}", c.lhs, c.rhs)?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(if results.iter().all(|r| r.status.is_pass()) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

#[derive(Serialize)]
struct SeriesDoc<'a> {
    order: usize,
    results: &'a [SeriesCheckResult],
}

pub fn cmd_series(order: usize, format: OutputFormat, out: &mut dyn Write) -> Result<u8, CliError> {
    if order < MIN_ORDER {
        return Err(usage(format!(
            "--order must be at least {MIN_ORDER}, got {order}"
        )));
    }
    let results = run_series_checks(order).map_err(|e| usage(e.to_string()))?;
    match format {
        OutputFormat::Json => write_json(
            out,
            &SeriesDoc {
                order,
                results: &results,
            },
        )?,
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "order", "status", "first_mismatch"])?;
            for r in &results {
                w.write_record([
                    r.name.to_string(),
                    r.order.to_string(),
                    r.status.to_string(),
                    r.first_mismatch.map(|i| i.to_string()).unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Table => {
            for r in &results {
                write!(out, "{:<8} order={:<4} {}", r.name, r.order, r.status)?;
                if let Some(i) = r.first_mismatch {
                    write!(out, "  first mismatch at t^{i}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(if results.iter().all(|r| r.status.is_pass()) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}
