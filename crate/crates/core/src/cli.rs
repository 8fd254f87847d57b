//! Command-line front end.
//!
//! [`run`] parses arguments, writes data to `out` and diagnostics to `err`,
//! and returns the process exit code: 0 on success, 1 when `verify` finds a
//! disagreement, 2 on usage or runtime errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::engine::{class_gf, USpec};
use crate::enumerate::{
    enumerate_av_with, enumerate_xu_with, ClassSpec, CountTable, EnumerationOptions,
    DEFAULT_MAX_MEMBERS,
};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::ratfun::{Poly, Rational, RationalFunction};
use crate::septree::SeparatingTree;

/// Environment variable overriding the per-level member cap.
pub const MAX_MEMBERS_ENV: &str = "PERMCLASS_MAX_MEMBERS";

#[derive(Parser, Debug)]
#[command(
    name = "permclass",
    version,
    about = "Enumerate permutation classes and compute their rational generating functions"
)]
struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Test whether TEXT contains PATTERN
    Contain { text: String, pattern: String },
    /// Print the separating tree of a permutation
    Decompose { perm: String },
    /// Count Av(B), or X[U] ∩ Av(B) with --in-x-u, at lengths 1..=max
    Count(CountArgs),
    /// Compute the generating function of X[U] ∩ Av(B)
    Gf(GfArgs),
    /// Expand num/den as a power series
    Series(SeriesArgs),
    /// Compare the generating function against brute-force enumeration
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct CountArgs {
    /// Basis patterns separated by ';'
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    basis: String,
    #[arg(long)]
    max: usize,
    /// Restrict to X[U]: trivial, inc, dec or file:PATH
    #[arg(long = "in-x-u")]
    in_x_u: Option<String>,
    /// Also list the members of each length
    #[arg(long)]
    members: bool,
}

#[derive(Args, Debug)]
struct GfArgs {
    /// trivial, inc, dec or file:PATH
    #[arg(long, default_value = "trivial")]
    u: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    basis: String,
    /// Number of series coefficients to print (0 to skip)
    #[arg(long, default_value_t = 10)]
    series: usize,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// Numerator coefficients in ascending degree, comma separated
    #[arg(long, allow_hyphen_values = true)]
    num: String,
    /// Denominator coefficients in ascending degree, comma separated
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    den: String,
    /// Highest power of x to print
    #[arg(long, default_value_t = 10)]
    max: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "trivial")]
    u: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    basis: String,
    #[arg(long, default_value_t = 10)]
    max: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainReport {
    pub text: Permutation,
    pub pattern: Permutation,
    pub contained: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeReport {
    pub perm: Permutation,
    /// Bracket form of the separating tree, absent if not separable.
    pub tree: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfReport {
    pub u: String,
    pub basis: Vec<Permutation>,
    pub gf: RationalFunction,
    /// Coefficients of x^1..x^n as decimal strings.
    pub series: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub gf: RationalFunction,
    /// Coefficients of x^0..x^max.
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub u: String,
    pub basis: Vec<Permutation>,
    pub gf: RationalFunction,
    pub engine: Vec<String>,
    pub enumeration: Vec<u64>,
    /// Smallest length at which the two disagree.
    pub first_mismatch: Option<usize>,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let json = cli.json;
    match &cli.command {
        Command::Contain { text, pattern } => {
            let text = parse_perm(text, err)?;
            let pattern = parse_perm(pattern, err)?;
            let report = ContainReport {
                contained: text.contains(&pattern),
                text,
                pattern,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                emit(out, &report.contained.to_string())?;
            }
        }
        Command::Decompose { perm } => {
            let perm = parse_perm(perm, err)?;
            let tree = SeparatingTree::build(&perm)?.map(|t| t.to_string());
            if json {
                emit_json(out, &DecomposeReport { perm, tree })?;
            } else {
                emit(out, tree.as_deref().unwrap_or("not separable"))?;
            }
        }
        Command::Count(a) => {
            let spec = parse_basis(&a.basis, err)?;
            let opts = EnumerationOptions {
                max_members: max_members()?,
                keep_members: a.members,
            };
            let table = match &a.in_x_u {
                Some(u) => enumerate_xu_with(&parse_u(u, err)?, &spec, a.max, &opts)?,
                None => enumerate_av_with(&spec, a.max, &opts)?,
            };
            if json {
                emit_json(out, &table)?;
            } else {
                write_csv(out, &table)?;
            }
        }
        Command::Gf(a) => {
            let u = parse_u(&a.u, err)?;
            let spec = parse_basis(&a.basis, err)?;
            let gf = class_gf(&u, &spec)?;
            let series = counting_coeffs(&gf, a.series)?;
            let report = GfReport {
                u: u.to_string(),
                basis: spec.basis().to_vec(),
                gf,
                series: series.iter().map(BigInt::to_string).collect(),
            };
            if json {
                emit_json(out, &report)?;
            } else {
                emit(out, &format!("gf: {}", report.gf))?;
                emit(out, &format!("json: {}", to_json(&report.gf)?))?;
                if a.series > 0 {
                    emit(out, &format!("series: {}", report.series.join(", ")))?;
                }
            }
        }
        Command::Series(a) => {
            let gf = RationalFunction::new(parse_poly(&a.num)?, parse_poly(&a.den)?)?;
            let s = gf.series(a.max)?;
            let report = SeriesReport {
                coeffs: s.coeffs().iter().map(Rational::to_string).collect(),
                gf,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                emit(out, &report.coeffs.join(", "))?;
            }
        }
        Command::Verify(a) => {
            let u = parse_u(&a.u, err)?;
            let spec = parse_basis(&a.basis, err)?;
            let gf = class_gf(&u, &spec)?;
            let engine = counting_coeffs(&gf, a.max)?;
            let opts = EnumerationOptions {
                max_members: max_members()?,
                keep_members: false,
            };
            let table = enumerate_xu_with(&u, &spec, a.max, &opts)?;
            let first_mismatch = engine
                .iter()
                .zip(&table.counts)
                .position(|(e, &c)| *e != BigInt::from(c))
                .map(|i| i + 1);
            let report = VerifyReport {
                u: u.to_string(),
                basis: spec.basis().to_vec(),
                gf,
                engine: engine.iter().map(BigInt::to_string).collect(),
                enumeration: table.counts,
                first_mismatch,
            };
            if json {
                emit_json(out, &report)?;
            } else {
                match first_mismatch {
                    None => emit(out, &format!("ok: n = 1..={} agree ({})", a.max, report.gf))?,
                    Some(n) => emit(
                        out,
                        &format!(
                            "mismatch at n = {n}: engine {}, enumeration {}",
                            report.engine[n - 1],
                            report.enumeration[n - 1]
                        ),
                    )?,
                }
            }
            if let Some(n) = first_mismatch {
                writeln!(err, "verification failed: first disagreement at length {n}")
                    .map_err(io)?;
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn io(e: std::io::Error) -> Error {
    Error::Parse(format!("write failed: {e}"))
}

fn emit(out: &mut dyn Write, line: &str) -> Result<()> {
    writeln!(out, "{line}").map_err(io)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string(value).map_err(|e| Error::Parse(e.to_string()))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    emit(out, &to_json(value)?)
}

fn write_csv(out: &mut dyn Write, table: &CountTable) -> Result<()> {
    match &table.members {
        None => write!(out, "{}", table.to_csv()).map_err(io),
        Some(members) => {
            emit(out, "n,count,members")?;
            for (i, (c, level)) in table.counts.iter().zip(members).enumerate() {
                let list: Vec<String> = level.iter().map(Permutation::to_string).collect();
                emit(out, &format!("{},{},\"{}\"", i + 1, c, list.join(";")))?;
            }
            Ok(())
        }
    }
}

/// Coefficients of `x^1..=x^n` as integers.
fn counting_coeffs(gf: &RationalFunction, n: usize) -> Result<Vec<BigInt>> {
    let s = gf.series(n)?;
    s.coeffs()[1..]
        .iter()
        .map(|c| {
            c.is_integer()
                .then(|| c.to_integer())
                .ok_or_else(|| Error::Parse(format!("non-integral coefficient {c}")))
        })
        .collect()
}

fn parse_perm(token: &str, err: &mut dyn Write) -> Result<Permutation> {
    let (p, reduced) = Permutation::parse_lenient(token)?;
    if reduced {
        writeln!(
            err,
            "warning: `{}` is not a permutation of 1..n; using its pattern {p}",
            token.trim()
        )
        .map_err(io)?;
    }
    Ok(p)
}

/// `;`-separated patterns; blank entries are ignored, so `""` is the empty
/// basis.
fn parse_basis(text: &str, err: &mut dyn Write) -> Result<ClassSpec> {
    let patterns = text
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_perm(t, err))
        .collect::<Result<Vec<_>>>()?;
    ClassSpec::new(&patterns)
}

fn parse_u(text: &str, err: &mut dyn Write) -> Result<USpec> {
    match text.trim() {
        "trivial" | "1" => Ok(USpec::Trivial),
        "inc" | "increasing" => Ok(USpec::Increasing),
        "dec" | "decreasing" => Ok(USpec::Decreasing),
        t => {
            let path = t.strip_prefix("file:").ok_or_else(|| {
                Error::InvalidSpec(format!(
                    "unknown U `{t}`; expected trivial, inc, dec or file:PATH"
                ))
            })?;
            let contents = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidSpec(format!("cannot read `{path}`: {e}")))?;
            let members = parse_u_file(&contents, err)?;
            let (u, added) = USpec::finite_closure(&members)?;
            if added {
                writeln!(
                    err,
                    "warning: `{path}` is not downward closed; using its closure"
                )
                .map_err(io)?;
            }
            Ok(u)
        }
    }
}

/// Whitespace- or `;`-separated permutations; `#` starts a comment.
fn parse_u_file(contents: &str, err: &mut dyn Write) -> Result<Vec<Permutation>> {
    contents
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(|l| l.split(|c: char| c.is_whitespace() || c == ';'))
        .filter(|t| !t.is_empty())
        .map(|t| parse_perm(t, err))
        .collect()
}

fn parse_poly(text: &str) -> Result<Poly> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<Rational>()
                .map_err(|_| Error::Parse(format!("invalid coefficient `{t}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Poly::from_coeffs)
}

/// Per-level cap from the environment, or the library default.
pub fn max_members() -> Result<usize> {
    match std::env::var(MAX_MEMBERS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::InvalidSpec(format!(
                "{MAX_MEMBERS_ENV}=`{v}` is not a non-negative integer"
            ))
        }),
        Err(_) => Ok(DEFAULT_MAX_MEMBERS),
    }
}
