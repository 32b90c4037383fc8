//! `gcnum` — evaluate one-variable expressions and their exact first
//! derivatives using dual-number arithmetic.
//!
//! Subcommands:
//!
//! * `eval`  — evaluate at a dual point `at + imag·ε`
//! * `diff`  — value and exact derivative at a point
//! * `table` — tabulate value and derivative over a grid
//! * `check` — cross-check the dual derivative against central finite
//!   differences
//!
//! Exit codes: 0 success, 1 parse error, 2 domain error, 3 usage error,
//! 4 check tolerance exceeded. Diagnostics go to stderr; data to stdout.

use std::collections::HashMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gcnum::autodiff::fd_central;
use gcnum::expr::{eval_dual, free_variables, parse_source, EvalError, ExprNode};
use gcnum::{fmt::significant, Dual};

/// Evaluate expressions and exact derivatives with dual numbers.
///
/// Expressions use one free variable (any name), the constants pi and e,
/// the operators + - * / ^ (with ^ binding tighter than unary minus and
/// associating to the right), and the functions sin cos tan cot asin acos
/// atan acot sinh cosh tanh coth exp log sqrt cbrt abs conj. log takes an
/// optional leading base: log(2, x).
#[derive(Debug, Parser)]
#[command(name = "gcnum", version, max_term_width = 80)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression at the dual point `at + imag·ε`.
    Eval(EvalArgs),
    /// Print the value and exact derivative at a point.
    Diff(DiffArgs),
    /// Tabulate value and derivative over an inclusive grid.
    Table(TableArgs),
    /// Compare the exact derivative with a central finite difference.
    Check(CheckArgs),
}

#[derive(Debug, Args)]
struct ExprArg {
    /// The expression to evaluate; at most one free variable.
    #[arg(long, allow_hyphen_values = true)]
    expr: String,

    /// Significant digits in every numeric rendering.
    #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u8).range(4..=17))]
    digits: u8,
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[command(flatten)]
    common: ExprArg,

    /// Real part of the evaluation point.
    #[arg(long, allow_negative_numbers = true)]
    at: f64,

    /// Dual part of the evaluation point.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    imag: f64,

    /// Output format (csv is reserved for table).
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct DiffArgs {
    #[command(flatten)]
    common: ExprArg,

    /// The point to differentiate at.
    #[arg(long, allow_negative_numbers = true)]
    at: f64,

    /// Output format (csv is reserved for table).
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[command(flatten)]
    common: ExprArg,

    /// First grid point.
    #[arg(long, allow_negative_numbers = true)]
    from: f64,

    /// Inclusive upper end of the grid.
    #[arg(long, allow_negative_numbers = true)]
    to: f64,

    /// Grid spacing; must be positive.
    #[arg(long, allow_negative_numbers = true)]
    step: f64,

    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[command(flatten)]
    common: ExprArg,

    /// The point to differentiate at.
    #[arg(long, allow_negative_numbers = true)]
    at: f64,

    /// Finite-difference step; must be positive.
    #[arg(long = "h", default_value_t = 1e-6, allow_negative_numbers = true)]
    h: f64,

    /// Largest accepted relative difference.
    #[arg(long, default_value_t = 1e-5, allow_negative_numbers = true)]
    tol: f64,

    /// Output format (csv is reserved for table).
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
    Json,
}

/// A diagnostic paired with the process exit code it demands.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn usage(message: impl Into<String>) -> Self {
        Failure::new(3, message)
    }
}

impl From<EvalError> for Failure {
    fn from(err: EvalError) -> Self {
        // Everything evaluation can raise is a domain problem by the time
        // the variable is bound: division by a zero divisor, a function
        // off its domain, or a dual-valued exponent or base.
        Failure::new(2, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // Help and version are successes; everything else clap raises
            // is a usage problem and must exit 3, not clap's default 2.
            let code = match err.kind() {
                clap::error::ErrorKind::DisplayHelp
                | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };

    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Eval(args) => cmd_eval(args),
        Command::Diff(args) => cmd_diff(args),
        Command::Table(args) => cmd_table(args),
        Command::Check(args) => cmd_check(args),
    }
}

/// Parses the expression and identifies its single free variable, if any.
fn compile(expr: &str) -> Result<(ExprNode, Option<String>), Failure> {
    let node = parse_source(expr).map_err(|err| Failure::new(1, err.to_string()))?;
    let mut names = free_variables(&node).into_iter();
    let first = names.next();
    let extras: Vec<String> = names.collect();
    if !extras.is_empty() {
        let mut all = vec![first.unwrap()];
        all.extend(extras);
        return Err(Failure::usage(format!(
            "expected at most one free variable, found {}: {}",
            all.len(),
            all.join(", ")
        )));
    }
    Ok((node, first))
}

/// The free variable a derivative is taken with respect to.
fn differentiation_variable(var: Option<String>) -> Result<String, Failure> {
    var.ok_or_else(|| {
        Failure::usage("the expression has no free variable to differentiate with respect to")
    })
}

fn eval_at(
    node: &ExprNode,
    var: Option<&str>,
    point: Dual<f64>,
) -> Result<Dual<f64>, Failure> {
    let mut env = HashMap::new();
    if let Some(name) = var {
        env.insert(name.to_string(), point);
    }
    Ok(eval_dual(node, &env)?)
}

fn require_point_format(format: OutputFormat) -> Result<(), Failure> {
    if format == OutputFormat::Csv {
        return Err(Failure::usage("csv output is only available for table"));
    }
    Ok(())
}

fn require_positive(value: f64, what: &str) -> Result<(), Failure> {
    if !(value.is_finite() && value > 0.0) {
        return Err(Failure::usage(format!(
            "{what} must be a positive finite number, got {value}"
        )));
    }
    Ok(())
}

// ---- output helpers ----

/// A number as stdout text: fixed significant digits, locale-independent.
fn num(value: f64, digits: u8) -> String {
    significant(value, usize::from(digits))
}

/// A number as a JSON value: the same digit-limited rendering, with the
/// non-finite values (which JSON numbers cannot spell) mapped to null.
fn json_num(value: f64, digits: u8) -> String {
    if value.is_finite() {
        num(value, digits)
    } else {
        "null".to_string()
    }
}

/// A string as a JSON value, with full escaping.
fn json_str(value: &str) -> String {
    serde_json::to_string(value).expect("strings always serialize")
}

// ---- subcommands ----

fn cmd_eval(args: EvalArgs) -> Result<(), Failure> {
    require_point_format(args.format)?;
    let digits = args.common.digits;
    let (node, var) = compile(&args.common.expr)?;
    let result = eval_at(&node, var.as_deref(), Dual::new(args.at, args.imag))?;

    match args.format {
        OutputFormat::Text => println!("{}", result.format(usize::from(digits))),
        OutputFormat::Json => println!(
            "{{\"expr\":{},\"at\":{},\"value\":{},\"imag\":{}}}",
            json_str(&args.common.expr),
            json_num(args.at, digits),
            json_num(result.real(), digits),
            json_num(result.imag(), digits),
        ),
        OutputFormat::Csv => unreachable!("rejected above"),
    }
    Ok(())
}

fn cmd_diff(args: DiffArgs) -> Result<(), Failure> {
    require_point_format(args.format)?;
    let digits = args.common.digits;
    let (node, var) = compile(&args.common.expr)?;
    let var = differentiation_variable(var)?;
    let result = eval_at(&node, Some(&var), Dual::new(args.at, 1.0))?;

    match args.format {
        OutputFormat::Text => {
            println!("value {}", num(result.real(), digits));
            println!("derivative {}", num(result.imag(), digits));
        }
        OutputFormat::Json => println!(
            "{{\"expr\":{},\"at\":{},\"value\":{},\"derivative\":{}}}",
            json_str(&args.common.expr),
            json_num(args.at, digits),
            json_num(result.real(), digits),
            json_num(result.imag(), digits),
        ),
        OutputFormat::Csv => unreachable!("rejected above"),
    }
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    require_positive(args.step, "step")?;
    if !(args.from <= args.to) {
        return Err(Failure::usage(format!(
            "from ({}) must not exceed to ({})",
            args.from, args.to
        )));
    }
    let digits = args.common.digits;
    let (node, var) = compile(&args.common.expr)?;
    let var = differentiation_variable(var)?;

    // A domain error on one grid point leaves a hole, not a dead table.
    let rows: Vec<(f64, Option<(f64, f64)>)> = grid(args.from, args.to, args.step)
        .into_iter()
        .map(|x| {
            let value = eval_at(&node, Some(&var), Dual::new(x, 1.0))
                .ok()
                .map(|z| z.reim());
            (x, value)
        })
        .collect();

    match args.format {
        OutputFormat::Text => {
            for (x, cells) in rows {
                let (f, df) = cells.unwrap_or((f64::NAN, f64::NAN));
                println!("{} {} {}", num(x, digits), num(f, digits), num(df, digits));
            }
        }
        OutputFormat::Csv => {
            println!("x,f,df");
            for (x, cells) in rows {
                let (f, df) = cells.unwrap_or((f64::NAN, f64::NAN));
                println!("{},{},{}", num(x, digits), num(f, digits), num(df, digits));
            }
        }
        OutputFormat::Json => {
            let expr = json_str(&args.common.expr);
            println!("[");
            let last = rows.len().saturating_sub(1);
            for (index, (x, cells)) in rows.into_iter().enumerate() {
                let (f, df) = cells.unwrap_or((f64::NAN, f64::NAN));
                let comma = if index == last { "" } else { "," };
                println!(
                    "  {{\"expr\":{},\"x\":{},\"value\":{},\"derivative\":{}}}{}",
                    expr,
                    json_num(x, digits),
                    json_num(f, digits),
                    json_num(df, digits),
                    comma,
                );
            }
            println!("]");
        }
    }
    Ok(())
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    require_point_format(args.format)?;
    require_positive(args.h, "h")?;
    require_positive(args.tol, "tol")?;
    let digits = args.common.digits;
    let (node, var) = compile(&args.common.expr)?;
    let var = differentiation_variable(var)?;

    let dual = eval_at(&node, Some(&var), Dual::new(args.at, 1.0))?;
    let fd = fd_central(
        |x| eval_at(&node, Some(&var), Dual::new(x, 0.0)).map(|z| z.real()),
        args.at,
        args.h,
    )?;

    let derivative = dual.imag();
    let abs_diff = (derivative - fd).abs();
    let rel_diff = abs_diff / derivative.abs().max(1.0);

    match args.format {
        OutputFormat::Text => {
            println!("derivative {}", num(derivative, digits));
            println!("fd_derivative {}", num(fd, digits));
            println!("abs_diff {}", num(abs_diff, digits));
            println!("rel_diff {}", num(rel_diff, digits));
        }
        OutputFormat::Json => println!(
            "{{\"expr\":{},\"at\":{},\"value\":{},\"derivative\":{},\"fd_derivative\":{},\"abs_diff\":{},\"rel_diff\":{}}}",
            json_str(&args.common.expr),
            json_num(args.at, digits),
            json_num(dual.real(), digits),
            json_num(derivative, digits),
            json_num(fd, digits),
            json_num(abs_diff, digits),
            json_num(rel_diff, digits),
        ),
        OutputFormat::Csv => unreachable!("rejected above"),
    }

    if rel_diff <= args.tol {
        Ok(())
    } else {
        Err(Failure::new(
            4,
            format!(
                "relative difference {} exceeds tolerance {}",
                num(rel_diff, digits),
                num(args.tol, digits)
            ),
        ))
    }
}

/// The inclusive evaluation grid, generated by index (`from + k·step`) so
/// spacing does not drift, with a slop of `step·1e-9` on the upper end so
/// an endpoint that lands a rounding error past `to` still appears.
fn grid(from: f64, to: f64, step: f64) -> Vec<f64> {
    let limit = to + step * 1e-9;
    let mut points = Vec::new();
    for k in 0.. {
        let x = from + (k as f64) * step;
        if x > limit {
            break;
        }
        points.push(x);
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_inclusive_and_drift_free() {
        assert_eq!(grid(0.0, 2.0, 1.0), [0.0, 1.0, 2.0]);
        assert_eq!(grid(5.0, 5.0, 1.0), [5.0]);
        // 10 steps of 0.1 land on 1.0 within the slop.
        assert_eq!(grid(0.0, 1.0, 0.1).len(), 11);
        // An endpoint just past `to` by real spacing is excluded.
        assert_eq!(grid(0.0, 0.95, 0.1).len(), 10);
    }

    #[test]
    fn compile_rejects_a_second_variable() {
        let err = compile("x + y").unwrap_err();
        assert_eq!(err.code, 3);
        assert!(err.message.contains("x, y"));

        let (_, var) = compile("sin(q)/q").unwrap();
        assert_eq!(var.as_deref(), Some("q"));

        let (_, var) = compile("2 + pi").unwrap();
        assert_eq!(var, None);
    }

    #[test]
    fn parse_failures_map_to_exit_one() {
        let err = compile("2 +").unwrap_err();
        assert_eq!(err.code, 1);
        assert!(err.message.starts_with("parse error at 3"));
    }

    #[test]
    fn json_rendering_escapes_and_nulls() {
        assert_eq!(json_str("x\"y"), r#""x\"y""#);
        assert_eq!(json_num(f64::NAN, 12), "null");
        assert_eq!(json_num(0.25, 12), "0.25");
    }
}
