//! Command-line front end. Exit codes: 0 success, 1 usage or input error,
//! 2 when a word admits no radicand.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use crate::construction::{
    generate_from, solve_family, theorem_condition, FactorBound, Family, ParityVerdict, Solution,
};
use crate::continuant::{join, symmetric_triple, SymmetricWord};
use crate::corollary::{choose_word, errata_table, parity_report};
use crate::error::Error;
use crate::output::{
    parse_decimal, write_errata_csv, write_json_line, write_table, CheckOut, ErrataOut,
    ExpansionOut, FamilyOut, RecordOut, ReportOut,
};
use crate::surd::expand_sqrt;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_SOLUTION: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cfperiod",
    version,
    about = "Periodic continued fractions of square roots"
)]
struct Cli {
    #[command(flatten)]
    format: Format,

    /// Radicands at or above this bound are not factored (squarefree = unknown)
    #[arg(long, global = true, value_parser = parse_bound)]
    factor_bound: Option<BigUint>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Format {
    /// Emit one JSON object per line
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,

    /// Emit CSV (errata only)
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand √N and report its period
    Expand {
        #[arg(value_parser = parse_bound)]
        n: BigUint,
    },
    /// Evaluate the parity condition for a palindromic word
    Check {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Build the radicand family for a word and verify its first members
    Construct {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, default_value_t = 10)]
        count: u64,
    },
    /// Recipe word, Fibonacci identity and family for period k
    Corollary {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Compare the corrected and original recipes for k = 2..=kmax
    Errata {
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        kmax: u64,
    },
}

fn parse_bound(s: &str) -> Result<BigUint, String> {
    parse_decimal(s.trim()).ok_or_else(|| format!("{s:?} is not a non-negative decimal integer"))
}

struct Ctx<'a, W> {
    out: &'a mut W,
    json: bool,
    bound: FactorBound,
}

enum Failure {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parse `args` (including the program name) and run the subcommand, writing
/// results to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T, W, E>(args: I, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    if cli.format.csv && !matches!(cli.command, Command::Errata { .. }) {
        let _ = writeln!(err, "error: --csv is only supported by errata");
        return EXIT_USAGE;
    }
    let mut ctx = Ctx {
        out,
        json: cli.format.json,
        bound: cli.factor_bound.map(FactorBound).unwrap_or_default(),
    };
    let result = match cli.command {
        Command::Expand { n } => expand(&mut ctx, &n),
        Command::Check { word } => check(&mut ctx, &word),
        Command::Construct { word, count } => construct(&mut ctx, &word, count),
        Command::Corollary { k } => corollary(&mut ctx, k as usize),
        Command::Errata { kmax } => errata(&mut ctx, kmax as usize, cli.format.csv),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

type Outcome = Result<i32, Failure>;

fn expand<W: Write>(ctx: &mut Ctx<'_, W>, n: &BigUint) -> Outcome {
    let e = expand_sqrt(n)?;
    if ctx.json {
        write_json_line(ctx.out, &ExpansionOut::new(n, &e))?;
    } else {
        writeln!(ctx.out, "N       {n}")?;
        writeln!(ctx.out, "a0      {}", e.a0)?;
        writeln!(ctx.out, "period  {}", join(&e.period))?;
        writeln!(ctx.out, "k       {}", e.k())?;
        writeln!(ctx.out, "sqrt(N) = {e}")?;
    }
    Ok(EXIT_OK)
}

fn write_verdict<W: Write>(
    ctx: &mut Ctx<'_, W>,
    word: &SymmetricWord,
    v: &ParityVerdict,
) -> io::Result<()> {
    let t = symmetric_triple(word).expect("triple already validated");
    if ctx.json {
        return write_json_line(ctx.out, &CheckOut::new(word, &t, v));
    }
    writeln!(ctx.out, "word      ({word})")?;
    writeln!(ctx.out, "k         {}", v.k)?;
    writeln!(ctx.out, "C         {}", t.c)?;
    writeln!(ctx.out, "B         {}", t.b)?;
    writeln!(ctx.out, "A         {}", t.a)?;
    writeln!(ctx.out, "B even    {}", v.b_even)?;
    writeln!(ctx.out, "A even    {}", v.a_even)?;
    writeln!(ctx.out, "solvable  {}", v.solvable)
}

fn check<W: Write>(ctx: &mut Ctx<'_, W>, text: &str) -> Outcome {
    let word: SymmetricWord = text.parse()?;
    let v = theorem_condition(&word)?;
    write_verdict(ctx, &word, &v)?;
    Ok(if v.solvable {
        EXIT_OK
    } else {
        EXIT_NO_SOLUTION
    })
}

fn write_family<W: Write>(ctx: &mut Ctx<'_, W>, f: &Family) -> io::Result<()> {
    if ctx.json {
        write_json_line(ctx.out, &FamilyOut::new(f))
    } else {
        writeln!(ctx.out, "family    {f}")
    }
}

fn solve_or_report<W: Write>(
    ctx: &mut Ctx<'_, W>,
    word: &SymmetricWord,
) -> Result<Option<Family>, Failure> {
    match solve_family(word)? {
        Solution::Family(f) => Ok(Some(f)),
        Solution::NoSolution(v) => {
            write_verdict(ctx, word, &v)?;
            if !ctx.json {
                writeln!(ctx.out, "no radicand has this period word")?;
            }
            Ok(None)
        }
    }
}

fn construct<W: Write>(ctx: &mut Ctx<'_, W>, text: &str, count: u64) -> Outcome {
    let word: SymmetricWord = text.parse()?;
    let Some(family) = solve_or_report(ctx, &word)? else {
        return Ok(EXIT_NO_SOLUTION);
    };
    let records = generate_from(&family, count, &ctx.bound);
    if ctx.json {
        for r in &records {
            write_json_line(ctx.out, &RecordOut::from(r))?;
        }
        return Ok(EXIT_OK);
    }
    writeln!(ctx.out, "word      ({word})  k = {}", word.period())?;
    write_family(ctx, &family)?;
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            vec![
                r.b.to_string(),
                r.a0.to_string(),
                r.n.to_string(),
                r.expected_period.to_string(),
                r.actual_period.to_string(),
                r.word_match.to_string(),
                r.squarefree.to_string(),
            ]
        })
        .collect();
    write_table(
        ctx.out,
        &[
            "b",
            "a0",
            "N",
            "expected_period",
            "actual_period",
            "word_match",
            "squarefree",
        ],
        &rows,
    )?;
    Ok(EXIT_OK)
}

fn corollary<W: Write>(ctx: &mut Ctx<'_, W>, k: usize) -> Outcome {
    let report = parity_report(k);
    if ctx.json {
        write_json_line(ctx.out, &ReportOut::from(&report))?;
    } else {
        let closed = if k.is_multiple_of(3) {
            "2F_k + F_(k-1)"
        } else {
            "F_k"
        };
        writeln!(ctx.out, "k         {k}")?;
        writeln!(ctx.out, "word      ({})", report.word)?;
        writeln!(ctx.out, "Q_(k-1)   {}", report.q_k_minus_1)?;
        writeln!(ctx.out, "odd       {}", report.is_odd)?;
        writeln!(ctx.out, "{closed:<9} {}", report.fib_identity_value)?;
        writeln!(ctx.out, "identity  {}", report.identity_holds)?;
    }
    let word = choose_word(k);
    match solve_or_report(ctx, &word)? {
        Some(f) => write_family(ctx, &f)?,
        None => return Ok(EXIT_NO_SOLUTION),
    }
    Ok(EXIT_OK)
}

fn errata<W: Write>(ctx: &mut Ctx<'_, W>, kmax: usize, csv: bool) -> Outcome {
    let rows = errata_table(kmax);
    if csv {
        write_errata_csv(&mut *ctx.out, &rows)?;
    } else if ctx.json {
        for r in &rows {
            write_json_line(ctx.out, &ErrataOut::from(r))?;
        }
    } else {
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.k.to_string(),
                    format!("({})", r.corrected_word),
                    r.corrected_q.to_string(),
                    r.corrected_odd.to_string(),
                    format!("({})", r.original_word),
                    r.original_q.to_string(),
                    r.original_odd.to_string(),
                    r.erroneous_formula_value
                        .as_ref()
                        .map_or_else(|| "-".into(), ToString::to_string),
                ]
            })
            .collect();
        write_table(
            ctx.out,
            &[
                "k",
                "corrected_word",
                "corrected_Q",
                "odd",
                "original_word",
                "original_Q",
                "odd",
                "2F_k+F_(k-1)+F_(k+2)",
            ],
            &cells,
        )?;
    }
    Ok(EXIT_OK)
}
