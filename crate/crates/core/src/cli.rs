//! Command-line front end.
//!
//! Every command writes JSON by default and a plain table with `--format table`.
//! Exit codes: `0` success, `1` a verification failed, `2` usage or input error.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{input_err, Error, Result};
use crate::lift::{lift_function, lift_roundtrip_detailed};
use crate::pbf::{MultilinearPoly, PseudoBoolean, QuadForm, SymmetricSpec, TruthTable};
use crate::quadratize::{
    family_target, quadratize_family, quadratize_symmetric_general, Family, QuadratizationResult,
};
use crate::rational::{self, fmt_rational, parse_rational, parse_rational_list, Rational};
use crate::representation::{
    alphas_half, closed_form_alphas, fix_representation, solve_representation, NegPartRep,
};
use crate::verify::{parity_interpolant, verify_quadratization, VerifyReport};

/// Largest `n_max` accepted by `report`.
pub const MAX_REPORT_N: usize = 14;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "symquad",
    version,
    about = "Exact quadratizations of symmetric pseudo-Boolean functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a symmetric function as a sum of negative parts.
    Represent {
        #[command(flatten)]
        source: SymmetricSource,
        #[arg(long, value_enum, default_value_t = Mode::Half)]
        mode: Mode,
        /// One offset for every index, or a comma-separated list of n+1 offsets
        /// (general-eps only).
        #[arg(long)]
        eps: Option<String>,
    },
    /// Build a quadratization for a named family or explicit weight values.
    Quadratize {
        #[command(flatten)]
        source: SymmetricSource,
    },
    /// Check that a quadratic form quadratizes a function on every vertex.
    Verify {
        /// Quadratic form: inline JSON, a file path, or `-` for stdin.
        #[arg(long)]
        g: String,
        #[command(flatten)]
        source: SymmetricSource,
        /// Truth table as comma-separated values, `x1` the least significant bit.
        #[arg(long)]
        table: Option<String>,
    },
    /// Embed a multilinear polynomial into a symmetric function on 2^n - 1 variables.
    Lift {
        /// Multilinear polynomial JSON: inline, a file path, or `-` for stdin.
        #[arg(long)]
        input: String,
        /// Also quadratize the lift, project it back and verify.
        #[arg(long)]
        roundtrip: bool,
    },
    /// Degree of the multilinear interpolant of parity.
    Oracle {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Aux counts against the bounds for every family up to `n_max`.
    Report {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    GeneralEps,
    ClosedForm,
    Half,
    Fix,
}

/// Exactly one of `--family`, `--k` or `--input` selects the function.
#[derive(Debug, Clone, Default, Args)]
pub struct SymmetricSource {
    #[arg(long)]
    pub family: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    /// Values at weights 0..=n, comma-separated rationals.
    #[arg(long)]
    pub k: Option<String>,
    /// JSON: inline, a file path, or `-` for stdin.
    #[arg(long)]
    pub input: Option<String>,
}

enum Target {
    Family(Family, SymmetricSpec),
    Spec(SymmetricSpec),
}

impl Target {
    fn spec(&self) -> &SymmetricSpec {
        match self {
            Target::Family(_, s) | Target::Spec(s) => s,
        }
    }
}

/// Result of a command: the text to emit and the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn read_source(arg: &str, stdin: &mut dyn Read) -> Result<String> {
    let trimmed = arg.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(arg.to_string());
    }
    let mut s = String::new();
    if arg == "-" {
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Input(format!("reading stdin: {e}")))?;
    } else {
        s = std::fs::read_to_string(arg)
            .map_err(|e| Error::Input(format!("reading {arg}: {e}")))?;
    }
    Ok(s)
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed {what} JSON: {e}")))
}

impl SymmetricSource {
    fn given(&self) -> usize {
        [
            self.family.is_some(),
            self.k.is_some(),
            self.input.is_some(),
        ]
        .into_iter()
        .filter(|&b| b)
        .count()
    }

    fn resolve(&self, stdin: &mut dyn Read) -> Result<Target> {
        if self.given() != 1 {
            return input_err("give exactly one of --family, --k, --input");
        }
        let target = if let Some(name) = &self.family {
            let family: Family = name.parse()?;
            let n = self
                .n
                .ok_or_else(|| Error::Input("--family needs --n".into()))?;
            Target::Family(family, family_target(family, self.t, n)?)
        } else if let Some(k) = &self.k {
            Target::Spec(SymmetricSpec::new(parse_rational_list(k)?)?)
        } else {
            let text = read_source(self.input.as_deref().unwrap_or_default(), stdin)?;
            Target::Spec(parse_json(&text, "symmetric spec")?)
        };
        if let (Some(n), Target::Spec(s)) = (self.n, &target) {
            if s.n() != n {
                return input_err(format!("--n {n} disagrees with {} given values", s.n() + 1));
            }
        }
        Ok(target)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum FunctionJson {
    Symmetric(SymmetricSpec),
    Multilinear(MultilinearPoly),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutput {
    pub function: String,
    pub n: usize,
    pub degree: usize,
    #[serde(with = "rational::serde_str")]
    pub top_coefficient: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub family: Family,
    pub n: usize,
    pub t: Option<usize>,
    pub aux_count: usize,
    pub paper_bound: usize,
    pub verified: bool,
}

#[derive(Serialize)]
struct LiftOutput<'a> {
    lift: &'a crate::lift::LiftSpec,
    lifted: &'a QuadForm,
    projected: &'a QuadForm,
    report: &'a VerifyReport,
}

/// Fixed sample used for the general-symmetric rows: `k_l = (l³ − 3l²)/2`.
pub fn report_sample(n: usize) -> SymmetricSpec {
    SymmetricSpec::from_fn(n, |l| {
        let l = l as i64;
        rational::rat(l * l * l - 3 * l * l, 2)
    })
    .expect("n >= 1")
}

fn report_params(family: Family, n: usize) -> Vec<Option<usize>> {
    match family {
        Family::TOutOfN => (1..=n).map(Some).collect(),
        Family::ExactT => (0..=n).map(Some).collect(),
        Family::PosMonomialSplit if n < 3 || n.is_multiple_of(2) => vec![],
        Family::NegMonomialAsymmetric if n < 2 => vec![],
        Family::FromRep => vec![],
        _ => vec![None],
    }
}

/// Rows of the `report` table, in family order then `n` then `t`.
pub fn report_rows(n_max: usize) -> Result<Vec<ReportRow>> {
    if n_max == 0 || n_max > MAX_REPORT_N {
        return input_err(format!("n_max must be in 1..={MAX_REPORT_N}, got {n_max}"));
    }
    let mut rows = Vec::new();
    for family in Family::ALL {
        for n in 1..=n_max {
            for t in report_params(family, n) {
                let (result, target) = if family == Family::GeneralSymmetric {
                    let spec = report_sample(n);
                    (quadratize_symmetric_general(&spec)?, spec)
                } else {
                    (
                        quadratize_family(family, t, n)?,
                        family_target(family, t, n)?,
                    )
                };
                let verified = verify_quadratization(&result.g, &target)?.passed;
                rows.push(ReportRow {
                    family,
                    n,
                    t,
                    aux_count: result.aux_count,
                    paper_bound: result.paper_bound,
                    verified,
                });
            }
        }
    }
    Ok(rows)
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable") + "\n"
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Renders rows with left-aligned columns.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    line(
        widths
            .iter()
            .map(|&w| "-".repeat(w))
            .collect::<Vec<_>>()
            .iter()
            .map(String::as_str)
            .collect(),
    );
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

fn rep_table(rep: &NegPartRep) -> String {
    let mut out = format!(
        "affine: {} + ({})*l + ({})*l^2\n",
        fmt_rational(&rep.affine_const),
        fmt_rational(&rep.affine_linear),
        fmt_rational(&rep.quadratic)
    );
    let rows: Vec<Vec<String>> = rep
        .terms()
        .iter()
        .enumerate()
        .map(|(i, t)| vec![i.to_string(), fmt_rational(&t.alpha), fmt_rational(&t.eps)])
        .collect();
    out.push_str(&table(&["i", "alpha", "eps"], &rows));
    out
}

fn result_table(r: &QuadratizationResult) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "family       {}", r.family);
    let _ = writeln!(out, "n            {}", r.g.n());
    let _ = writeln!(out, "aux_count    {}", r.aux_count);
    let _ = writeln!(out, "paper_bound  {}", r.paper_bound);
    let _ = writeln!(out, "y_linear     {}", yes_no(r.y_linear));
    let _ = writeln!(out, "x_symmetric  {}", yes_no(r.x_symmetric));
    let _ = writeln!(out, "g = {}", r.g.poly());
    out
}

fn verify_table(r: &VerifyReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "passed            {}", yes_no(r.passed));
    let _ = writeln!(out, "checked_points    {}", r.checked_points);
    let _ = writeln!(out, "y_linear          {}", yes_no(r.y_linear));
    let _ = writeln!(out, "x_symmetric       {}", yes_no(r.x_symmetric));
    let _ = writeln!(out, "global_min_match  {}", yes_no(r.global_min_match));
    if let Some(c) = &r.counterexample {
        let bits: String = c.x.iter().map(|b| char::from(b'0' + b)).collect();
        let _ = writeln!(
            out,
            "counterexample    x = {bits}, f(x) = {}, min_y g = {}",
            fmt_rational(&c.expected),
            fmt_rational(&c.got)
        );
    }
    out
}

/// The `report` table as text.
pub fn report_table(rows: &[ReportRow]) -> String {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.family.to_string(),
                r.n.to_string(),
                r.t.map_or("-".into(), |t| t.to_string()),
                r.aux_count.to_string(),
                r.paper_bound.to_string(),
                yes_no(r.verified).into(),
            ]
        })
        .collect();
    table(&["family", "n", "t", "aux", "bound", "verified"], &cells)
}

fn represent(
    source: &SymmetricSource,
    mode: Mode,
    eps: Option<&str>,
    stdin: &mut dyn Read,
) -> Result<NegPartRep> {
    let target = source.resolve(stdin)?;
    let spec = target.spec();
    let need_eps = || eps.ok_or_else(|| Error::Input("this mode needs --eps".into()));
    match mode {
        Mode::Half => Ok(alphas_half(spec)),
        Mode::Fix => Ok(fix_representation(spec)),
        Mode::ClosedForm => closed_form_alphas(spec, &parse_rational(need_eps()?)?),
        Mode::GeneralEps => {
            let mut list = parse_rational_list(need_eps()?)?;
            if list.len() == 1 {
                list = vec![list[0].clone(); spec.n() + 1];
            }
            solve_representation(spec, &list)
        }
    }
}

fn quadratize(source: &SymmetricSource, stdin: &mut dyn Read) -> Result<QuadratizationResult> {
    match source.resolve(stdin)? {
        Target::Family(family, spec) => quadratize_family(family, source.t, spec.n()),
        Target::Spec(spec) => quadratize_symmetric_general(&spec),
    }
}

fn verify(
    g: &str,
    source: &SymmetricSource,
    table: Option<&str>,
    stdin: &mut dyn Read,
) -> Result<VerifyReport> {
    let g: QuadForm = parse_json(&read_source(g, stdin)?, "quadratic form")?;
    let f: Box<dyn PseudoBoolean> = match table {
        Some(values) => {
            if source.given() > 0 {
                return input_err("give exactly one of --family, --k, --input, --table");
            }
            Box::new(TruthTable::new(parse_rational_list(values)?)?)
        }
        None if source.input.is_some() && source.given() == 1 => {
            let text = read_source(source.input.as_deref().unwrap_or_default(), stdin)?;
            match parse_json::<FunctionJson>(&text, "function")? {
                FunctionJson::Symmetric(s) => Box::new(s),
                FunctionJson::Multilinear(p) => Box::new(p),
            }
        }
        None => Box::new(source.resolve(stdin)?.spec().clone()),
    };
    verify_quadratization(&g, f.as_ref())
}

/// Runs a parsed command. Errors map to exit code 2 in [`main_with_args`].
pub fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let json = cli.format == Format::Json;
    let ok = |text: String| Outcome {
        text,
        code: EXIT_OK,
    };
    match &cli.command {
        Command::Represent { source, mode, eps } => {
            let rep = represent(source, *mode, eps.as_deref(), stdin)?;
            Ok(ok(if json { to_json(&rep) } else { rep_table(&rep) }))
        }
        Command::Quadratize { source } => {
            let r = quadratize(source, stdin)?;
            Ok(ok(if json { to_json(&r) } else { result_table(&r) }))
        }
        Command::Verify { g, source, table } => {
            let report = verify(g, source, table.as_deref(), stdin)?;
            let text = if json {
                to_json(&report)
            } else {
                verify_table(&report)
            };
            Ok(Outcome {
                text,
                code: if report.passed { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::Lift { input, roundtrip } => {
            let f: MultilinearPoly =
                parse_json(&read_source(input, stdin)?, "multilinear polynomial")?;
            if !roundtrip {
                let lift = lift_function(&f)?;
                return Ok(ok(if json {
                    to_json(&lift)
                } else {
                    let k: Vec<String> = lift.k().iter().map(fmt_rational).collect();
                    format!(
                        "n = {}, N = {}\nk = ({})\n",
                        lift.n(),
                        lift.big_n(),
                        k.join(", ")
                    )
                }));
            }
            let rt = lift_roundtrip_detailed(&f)?;
            let text = if json {
                to_json(&LiftOutput {
                    lift: &rt.lift,
                    lifted: &rt.lifted,
                    projected: &rt.projected,
                    report: &rt.report,
                })
            } else {
                format!(
                    "N = {}, aux = {}\ng = {}\n{}",
                    rt.lift.big_n(),
                    rt.projected.m(),
                    rt.projected.poly(),
                    verify_table(&rt.report)
                )
            };
            Ok(Outcome {
                text,
                code: if rt.report.passed {
                    EXIT_OK
                } else {
                    EXIT_FAILED
                },
            })
        }
        Command::Oracle { n } => {
            if *n == 0 || *n > crate::pbf::MAX_TABLE_VARS {
                return input_err(format!(
                    "oracle n must be in 1..={}",
                    crate::pbf::MAX_TABLE_VARS
                ));
            }
            let (degree, top) = parity_interpolant(*n);
            let out = OracleOutput {
                function: "parity".into(),
                n: *n,
                degree,
                top_coefficient: top,
            };
            Ok(ok(if json {
                to_json(&out)
            } else {
                format!(
                    "parity on {n} variables: degree {degree}, top coefficient {}\n",
                    fmt_rational(&out.top_coefficient)
                )
            }))
        }
        Command::Report { n_max } => {
            let rows = report_rows(*n_max)?;
            let all = rows
                .iter()
                .all(|r| r.verified && r.aux_count <= r.paper_bound);
            let text = if json {
                to_json(&rows)
            } else {
                report_table(&rows)
            };
            Ok(Outcome {
                text,
                code: if all { EXIT_OK } else { EXIT_FAILED },
            })
        }
    }
}

/// Parses arguments, runs the command, writes output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli, &mut std::io::stdin()) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &outcome.text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.text.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: writing output: {e}");
        return EXIT_USAGE;
    }
    outcome.code
}
