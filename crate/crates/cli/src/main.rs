//! `pimenov`: batch front end for the algebra kernel.
//!
//! Exit codes: 0 success, 1 mathematical negative (not invertible, no solution, domain
//! error, failed check), 2 usage or parse error, 3 unsupported.

use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pimenov_core::expr::{print_with, to_json_value, Style};
use pimenov_core::testkit::{exhaustive_classifier_check_with, random_element, DegreeFilter, GridSpec, Profile};
use pimenov_core::{
    factor, invert, is_prime, parse, solve_division, AlgebraError, DivisionStatus, Element,
    FactorizationResult, PrimalityVerdict, MAX_GENERATORS,
};

#[derive(Parser)]
#[command(name = "pimenov", version, about = "Exact arithmetic, division and factorization in Pimenov algebras P_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the inverse of each expression.
    Invert(Inputs),
    /// Multiply the expressions together.
    Mul(Inputs),
    /// Solve A*X = B for X: particular solution and kernel basis.
    Divide(Inputs),
    /// Factor each expression into primes.
    Factor(Inputs),
    /// Decide primality of each expression.
    Prime(Inputs),
    /// Reprint each expression in canonical form.
    Normalize(Inputs),
    /// Compare the four-generator classifier against a brute-force factor search.
    Check(CheckArgs),
    /// Print a seeded random element.
    Random(RandomArgs),
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Mode::Text)]
    output: Mode,
    /// Use ι and · in text output.
    #[arg(long)]
    unicode: bool,
}

#[derive(Args)]
struct Inputs {
    /// Number of generators.
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..=MAX_GENERATORS as u64))]
    n: u64,
    /// Read expressions from a file, one per line, after any positional ones.
    #[arg(long)]
    file: Option<std::path::PathBuf>,
    #[command(flatten)]
    out: Output,
    /// Expressions such as "2 + i1 - i2*i3". Put any that start with '-' after `--`.
    exprs: Vec<String>,
}

#[derive(Args)]
struct CheckArgs {
    /// Coefficients of the enumerated quadratics (zero is always included).
    #[arg(long, default_value = "-1,1", allow_hyphen_values = true)]
    grid: String,
    /// Coefficients tried by the factor search; defaults to --grid.
    #[arg(long, allow_hyphen_values = true)]
    oracle_grid: Option<String>,
    /// Cap on candidate factor pairs per instance.
    #[arg(long, default_value_t = pimenov_core::testkit::DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, value_enum, default_value_t = Mode::Text)]
    output: Mode,
}

#[derive(Args)]
struct RandomArgs {
    #[arg(short = 'n', value_parser = clap::value_parser!(u64).range(1..=MAX_GENERATORS as u64))]
    n: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// invertible, non-invertible, or homogeneous:T
    #[arg(long, default_value = "invertible")]
    profile: String,
    #[command(flatten)]
    out: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Text,
    Json,
}

/// Failure with its exit code; the message goes to stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        let code = match e {
            AlgebraError::Unsupported(_) | AlgebraError::Resource(_) => 3,
            AlgebraError::DimensionMismatch { .. }
            | AlgebraError::FieldMismatch { .. }
            | AlgebraError::GeneratorCount { .. }
            | AlgebraError::IndexOutOfRange { .. }
            | AlgebraError::DegreeOutOfRange { .. }
            | AlgebraError::InvalidRadicand(_)
            | AlgebraError::Contract(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Collected stdout text plus the worst exit code seen.
#[derive(Default)]
struct Report {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Report {
    fn line(&mut self, text: impl AsRef<str>) {
        self.stdout.push_str(text.as_ref());
        self.stdout.push('\n');
    }

    fn fail(&mut self, f: Failure) {
        let _ = writeln!(self.stderr, "error: {}", f.message);
        self.code = self.code.max(f.code);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(cli.command);
    let _ = io::stdout().write_all(report.stdout.as_bytes());
    let _ = io::stderr().write_all(report.stderr.as_bytes());
    ExitCode::from(report.code)
}

fn run(command: Command) -> Report {
    let mut report = Report::default();
    let result = match command {
        Command::Invert(inputs) => each(&inputs, &mut report, cmd_invert),
        Command::Factor(inputs) => each(&inputs, &mut report, cmd_factor),
        Command::Prime(inputs) => each(&inputs, &mut report, cmd_prime),
        Command::Normalize(inputs) => each(&inputs, &mut report, |x, out| Ok(render(x, out))),
        Command::Mul(inputs) => cmd_mul(&inputs, &mut report),
        Command::Divide(inputs) => cmd_divide(&inputs, &mut report),
        Command::Check(args) => cmd_check(&args, &mut report),
        Command::Random(args) => cmd_random(&args, &mut report),
    };
    if let Err(f) = result {
        report.fail(f);
    }
    report
}

fn load(inputs: &Inputs) -> Result<Vec<Element>, Failure> {
    let mut texts = inputs.exprs.clone();
    if let Some(path) = &inputs.file {
        let body = std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
        texts.extend(body.lines().map(str::trim).filter(|l| !l.is_empty()).map(String::from));
    }
    if texts.is_empty() {
        return Err(Failure::usage("no expressions given"));
    }
    texts
        .iter()
        .enumerate()
        .map(|(i, text)| {
            let x = parse(text, inputs.n as usize).map_err(|e| {
                let caret = " ".repeat(text[..e.position.min(text.len())].chars().count());
                Failure::usage(format!("expression {}: {e}\n  {text}\n  {caret}^", i + 1))
            })?;
            if !x.is_rational() {
                return Err(Failure::usage(format!(
                    "expression {}: only rational coefficients are accepted as input",
                    i + 1
                )));
            }
            Ok(x)
        })
        .collect()
}

fn render(x: &Element, out: &Output) -> String {
    match out.output {
        Mode::Json => to_json_value(x).to_string(),
        Mode::Text if out.unicode => print_with(x, Style::Unicode),
        Mode::Text => print_with(x, Style::Ascii),
    }
}

/// Runs a one-expression command over every input, continuing past failures.
fn each(
    inputs: &Inputs,
    report: &mut Report,
    f: impl Fn(&Element, &Output) -> Result<String, Failure>,
) -> Result<(), Failure> {
    for x in load(inputs)? {
        match f(&x, &inputs.out) {
            Ok(text) => report.line(text),
            Err(e) => report.fail(e),
        }
    }
    Ok(())
}

fn cmd_invert(x: &Element, out: &Output) -> Result<String, Failure> {
    Ok(render(&invert(x)?, out))
}

fn factors_text(f: &FactorizationResult, out: &Output) -> String {
    f.factors
        .iter()
        .map(|g| format!("({})", render(g, out)))
        .collect::<Vec<_>>()
        .join(" * ")
}

fn factorization_json(f: &FactorizationResult) -> Value {
    json!({
        "factors": f.factors.iter().map(to_json_value).collect::<Vec<_>>(),
        "field": f.field.to_string(),
        "verified": f.verified,
        "input_is_prime": f.input_is_prime,
    })
}

fn cmd_factor(x: &Element, out: &Output) -> Result<String, Failure> {
    let f = factor(x)?;
    Ok(match out.output {
        Mode::Json => factorization_json(&f).to_string(),
        Mode::Text => format!("{}\nfield: {}", factors_text(&f, out), f.field),
    })
}

fn cmd_prime(x: &Element, out: &Output) -> Result<String, Failure> {
    let v: PrimalityVerdict = is_prime(x)?;
    let text = match out.output {
        Mode::Json => json!({
            "verdict": v.verdict.to_string(),
            "reason": v.reason,
            "pattern": v.pattern.as_ref().map(|p| p.class.name()),
            "witness": v.witness.as_ref().map(factorization_json),
        })
        .to_string(),
        Mode::Text => match &v.witness {
            Some(w) => format!("{} ({})\n{}", v.verdict, v.reason, factors_text(w, out)),
            None => format!("{} ({})", v.verdict, v.reason),
        },
    };
    if v.verdict == pimenov_core::Verdict::Unsupported {
        return Err(Failure { code: 3, message: format!("{}: {}", x, v.reason) });
    }
    Ok(text)
}

fn cmd_mul(inputs: &Inputs, report: &mut Report) -> Result<(), Failure> {
    let xs = load(inputs)?;
    let mut product = xs[0].clone();
    for x in &xs[1..] {
        product = product.mul(x)?;
    }
    report.line(render(&product, &inputs.out));
    Ok(())
}

fn cmd_divide(inputs: &Inputs, report: &mut Report) -> Result<(), Failure> {
    let xs = load(inputs)?;
    let [a, b] = xs.as_slice() else {
        return Err(Failure::usage(format!("divide takes two expressions A B, got {}", xs.len())));
    };
    let sol = solve_division(a, b)?;
    match inputs.out.output {
        Mode::Json => {
            let status = match sol.status {
                DivisionStatus::Unique => "unique",
                DivisionStatus::AffineFamily => "affine-family",
                DivisionStatus::NoSolution => "no-solution",
            };
            report.line(
                json!({
                    "status": status,
                    "particular": sol.particular.as_ref().map(to_json_value),
                    "kernel": sol.kernel_basis.iter().map(to_json_value).collect::<Vec<_>>(),
                    "rank": sol.rank,
                    "solutions_invertible": sol.solutions_invertible,
                })
                .to_string(),
            );
        }
        Mode::Text => match &sol.particular {
            None => report.line("no solution"),
            Some(x) => {
                report.line(format!("particular: {}", render(x, &inputs.out)));
                let kernel: Vec<String> = sol.kernel_basis.iter().map(|k| render(k, &inputs.out)).collect();
                report.line(format!("kernel: [{}]", kernel.join(", ")));
                report.line(format!("rank: {}", sol.rank));
                if let Some(inv) = sol.solutions_invertible {
                    report.line(format!("solutions invertible: {inv}"));
                }
            }
        },
    }
    if sol.status == DivisionStatus::NoSolution {
        report.code = report.code.max(1);
    }
    Ok(())
}

fn parse_grid(text: &str) -> Result<GridSpec, Failure> {
    let values = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let c = parse(s, 1).map_err(|e| Failure::usage(format!("grid value {s:?}: {e}")))?;
            if c.degree() != pimenov_core::Degree::Finite(0) && !c.is_zero() {
                return Err(Failure::usage(format!("grid value {s:?} is not a number")));
            }
            c.real_part()
                .as_rational()
                .cloned()
                .ok_or_else(|| Failure::usage(format!("grid value {s:?} is not rational")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GridSpec::new(values, 4, DegreeFilter::Homogeneous(2)))
}

fn cmd_check(args: &CheckArgs, report: &mut Report) -> Result<(), Failure> {
    let instances = parse_grid(&args.grid)?;
    let oracle = match &args.oracle_grid {
        Some(g) => parse_grid(g)?,
        None => instances.clone(),
    }
    .with_budget(args.budget);
    let result = exhaustive_classifier_check_with(&instances, &oracle)?;
    match args.output {
        Mode::Text => report.stdout.push_str(&result.to_text()),
        Mode::Json => report.stdout.push_str(&result.to_json_lines()),
    }
    if !result.is_clean() {
        report.code = report.code.max(1);
    }
    Ok(())
}

fn cmd_random(args: &RandomArgs, report: &mut Report) -> Result<(), Failure> {
    let profile = match args.profile.as_str() {
        "invertible" => Profile::Invertible,
        "non-invertible" => Profile::NonInvertible,
        other => match other.strip_prefix("homogeneous:").and_then(|t| t.parse().ok()) {
            Some(t) => Profile::Homogeneous(t),
            None => return Err(Failure::usage(format!("unknown profile {other:?}"))),
        },
    };
    let x = random_element(args.n as usize, args.seed, profile);
    report.line(render(&x, &args.out));
    Ok(())
}
