//! Command-line front end.
//!
//! Exit codes: `0` success, `2` syntax or usage error, `3` semantic error
//! (sign range, shape, zero inverse, ...), `4` a law verdict differs from the
//! expected table, `5` a law sweep exceeds the case budget.

use std::str::FromStr;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::expr::{self, format_expr, grouping_sensitivity, ExprError, Shape, Value};
use crate::laws::{
    self, default_laws, expected_verdict, CheckConfig, Domain, Execution, LawError, LawId,
    LawReport, SuiteUniverse, TupleDomain, Verdict,
};
use crate::magnitude::Magnitude;
use crate::number::{solve_linear, MultisignNumber};
use crate::structures::{from_signed, to_signed, SignedRational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_SYNTAX: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;
pub const EXIT_LAW_MISMATCH: i32 = 4;
pub const EXIT_BUDGET: i32 = 5;

pub const BUDGET_ENV: &str = "MULTISIGN_TRIPLE_BUDGET";

#[derive(Parser, Debug)]
#[command(
    name = "multisign",
    version,
    about = "Exact multisign arithmetic and law checking"
)]
pub struct Cli {
    /// Number of signs `s`, or per-slot counts `s1,s2,...` for tuples (`s,` for one slot).
    #[arg(long, global = true)]
    pub signs: Option<SignsArg>,

    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Text)]
    pub output: OutputMode,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Structured,
}

/// `s` for a single carrier, `s1,s2,...` for tuples; a trailing comma
/// (`5,`) declares a one-slot tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignsArg(pub Shape);

impl SignsArg {
    pub fn shape(&self) -> Shape {
        self.0.clone()
    }
}

impl FromStr for SignsArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let trimmed = s.trim();
        let (body, trailing) = match trimmed.strip_suffix(',') {
            Some(body) => (body, true),
            None => (trimmed, false),
        };
        let counts = body
            .split(',')
            .map(|part| match part.trim().parse::<u32>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(format!(
                    "invalid sign count `{}` (expected a positive integer)",
                    part.trim()
                )),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignsArg(match counts.as_slice() {
            [s] if !trailing => Shape::Scalar(*s),
            _ => Shape::Tuple(counts),
        }))
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate an expression such as `^1 1 + ^3 1`.
    Eval {
        /// Also enumerate every grouping of each addition chain.
        #[arg(long)]
        sensitivity: bool,
        expression: String,
    },
    /// List the additive or multiplicative inverses of a value.
    #[command(group(ArgGroup::new("which").required(true).args(["additive", "multiplicative"])))]
    Inverses {
        #[arg(long)]
        additive: bool,
        #[arg(long)]
        multiplicative: bool,
        value: String,
    },
    /// Solve `x * a + b = 0` for every `x`.
    Solve {
        #[arg(long = "a")]
        a: String,
        #[arg(long = "b")]
        b: String,
    },
    /// Check the algebraic laws exhaustively over a magnitude grid.
    Laws {
        /// Restrict to these laws (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        only: Vec<LawId>,
        /// Comma-separated magnitude grid; 0 is always included.
        #[arg(long, default_value = "0,1/2,1,2")]
        mags: String,
        /// Counterexamples printed per law.
        #[arg(long, default_value_t = laws::DEFAULT_COUNTEREXAMPLE_CAP)]
        cap: usize,
        /// Largest number of cases one law may sweep.
        #[arg(long, env = BUDGET_ENV, default_value_t = laws::DEFAULT_TRIPLE_BUDGET)]
        budget: u64,
        /// Disable the parallel sweep.
        #[arg(long)]
        sequential: bool,
    },
    /// Map between the two-sign carrier and signed rationals.
    #[command(group(ArgGroup::new("direction").required(true).args(["to_signed", "from_signed"])))]
    Convert {
        #[arg(long, value_name = "MULTISIGN")]
        to_signed: Option<String>,
        #[arg(long, value_name = "RATIONAL", allow_hyphen_values = true)]
        from_signed: Option<String>,
    },
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn expr_failure(e: ExprError) -> Outcome {
    let code = if e.is_syntax() {
        EXIT_SYNTAX
    } else {
        EXIT_SEMANTIC
    };
    Outcome::fail(code, e)
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("records serialize");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_SYNTAX,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome::ok(rendered)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let Some(signs) = &cli.signs else {
        return Outcome::fail(EXIT_SYNTAX, "--signs is required");
    };
    let shape = signs.shape();
    let mode = cli.output;
    match &cli.command {
        Command::Eval {
            sensitivity,
            expression,
        } => cmd_eval(&shape, mode, expression, *sensitivity),
        Command::Inverses {
            multiplicative,
            value,
            ..
        } => cmd_inverses(&shape, mode, value, *multiplicative),
        Command::Solve { a, b } => cmd_solve(&shape, mode, a, b),
        Command::Laws {
            only,
            mags,
            cap,
            budget,
            sequential,
        } => {
            let cfg = CheckConfig {
                counterexample_cap: *cap,
                budget: *budget,
                execution: if *sequential {
                    Execution::Sequential
                } else {
                    Execution::default()
                },
            };
            cmd_laws(&shape, mode, only, mags, &cfg)
        }
        Command::Convert {
            to_signed,
            from_signed,
        } => match (to_signed, from_signed) {
            (Some(text), _) => cmd_convert(&shape, mode, text, Direction::ToSigned),
            (_, Some(text)) => cmd_convert(&shape, mode, text, Direction::FromSigned),
            _ => Outcome::fail(EXIT_SYNTAX, "convert needs --to-signed or --from-signed"),
        },
    }
}

#[derive(Serialize)]
struct EvalRecord {
    result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    sensitive: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<[String; 2]>,
}

pub fn cmd_eval(shape: &Shape, mode: OutputMode, text: &str, sensitivity: bool) -> Outcome {
    let tree = match expr::parse(text, shape) {
        Ok(tree) => tree,
        Err(e) => return expr_failure(e),
    };
    let value = match expr::eval(&tree) {
        Ok(v) => v,
        Err(e) => return expr_failure(e),
    };
    let mut record = EvalRecord {
        result: value.to_string(),
        sensitive: None,
        values: None,
        witness: None,
    };
    let mut text_out = vec![value.to_string()];
    if sensitivity {
        let report = match grouping_sensitivity(&tree) {
            Ok(r) => r,
            Err(e) => return expr_failure(e),
        };
        let values: Vec<String> = report
            .distinct_values
            .iter()
            .map(Value::to_string)
            .collect();
        record.sensitive = Some(report.is_sensitive);
        record.values = Some(values.clone());
        if let Some((written, other)) = &report.witness_groupings {
            let render = |e: &expr::Expr| {
                let v = expr::eval(e).map(|v| v.to_string()).unwrap_or_default();
                (format_expr(e), v)
            };
            let (w, wv) = render(written);
            let (o, ov) = render(other);
            text_out.push(format!(
                "warning: grouping-sensitive; possible values: {}",
                values.join(", ")
            ));
            text_out.push(format!("  as written:  {w} = {wv}"));
            text_out.push(format!("  regrouped:   {o} = {ov}"));
            record.witness = Some([w, o]);
        } else {
            text_out.push("grouping-insensitive".to_string());
        }
    }
    match mode {
        OutputMode::Text => Outcome::ok(lines(text_out)),
        OutputMode::Structured => Outcome::ok(json_line(&record)),
    }
}

#[derive(Serialize)]
struct InversesRecord {
    kind: &'static str,
    value: String,
    inverses: Vec<String>,
}

pub fn cmd_inverses(shape: &Shape, mode: OutputMode, text: &str, multiplicative: bool) -> Outcome {
    let value = match expr::eval_str(text, shape) {
        Ok(v) => v,
        Err(e) => return expr_failure(e),
    };
    let found: Result<Vec<String>, crate::Error> = match (&value, multiplicative) {
        (Value::Number(x), false) => Ok(x
            .additive_inverses()
            .iter()
            .map(ToString::to_string)
            .collect()),
        (Value::Number(x), true) => x.mul_inverse().map(|y| vec![y.to_string()]),
        (Value::Tuple(t), false) => Ok(t
            .additive_inverses()
            .iter()
            .map(ToString::to_string)
            .collect()),
        (Value::Tuple(t), true) => t.mul_inverse().map(|y| vec![y.to_string()]),
    };
    let inverses = match found {
        Ok(v) => v,
        Err(e) => return Outcome::fail(EXIT_SEMANTIC, e),
    };
    match mode {
        OutputMode::Text => Outcome::ok(lines(inverses)),
        OutputMode::Structured => Outcome::ok(json_line(&InversesRecord {
            kind: if multiplicative {
                "multiplicative"
            } else {
                "additive"
            },
            value: value.to_string(),
            inverses,
        })),
    }
}

#[derive(Serialize)]
struct SolveRecord {
    a: String,
    b: String,
    solutions: Vec<String>,
}

fn scalar_operand(text: &str, shape: &Shape) -> Result<MultisignNumber, Outcome> {
    match expr::eval_str(text, shape) {
        Ok(Value::Number(x)) => Ok(x),
        Ok(Value::Tuple(_)) => Err(Outcome::fail(EXIT_SEMANTIC, "expected a scalar value")),
        Err(e) => Err(expr_failure(e)),
    }
}

pub fn cmd_solve(shape: &Shape, mode: OutputMode, a_text: &str, b_text: &str) -> Outcome {
    if !matches!(shape, Shape::Scalar(_)) {
        return Outcome::fail(
            EXIT_SEMANTIC,
            "solve works on a single carrier; pass one sign count",
        );
    }
    let (a, b) = match (scalar_operand(a_text, shape), scalar_operand(b_text, shape)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(o), _) | (_, Err(o)) => return o,
    };
    let solutions = match solve_linear(&a, &b) {
        Ok(set) => set,
        Err(e) => return Outcome::fail(EXIT_SEMANTIC, e),
    };
    for x in solutions.iter() {
        let residual = x.mul(&a).and_then(|xa| xa.add(&b));
        assert!(
            matches!(&residual, Ok(r) if r.is_zero()),
            "solution {x} fails substitution: {residual:?}"
        );
    }
    let rendered: Vec<String> = solutions.iter().map(ToString::to_string).collect();
    match mode {
        OutputMode::Text => Outcome::ok(lines(rendered)),
        OutputMode::Structured => Outcome::ok(json_line(&SolveRecord {
            a: a.to_string(),
            b: b.to_string(),
            solutions: rendered,
        })),
    }
}

fn parse_grid(text: &str) -> Result<Vec<Magnitude>, crate::Error> {
    text.split(',').map(|part| part.trim().parse()).collect()
}

fn run_suite<U: SuiteUniverse>(
    dom: &U,
    mode: OutputMode,
    only: &[LawId],
    cfg: &CheckConfig,
) -> Outcome {
    let laws = if only.is_empty() {
        default_laws(dom)
    } else {
        only.to_vec()
    };
    let mut out = Outcome::default();
    let (mut mismatch, mut semantic, mut budget) = (false, false, false);
    for (law, result) in laws.iter().zip(laws::run_law_suite(dom, &laws, cfg)) {
        match result {
            Ok(report) => {
                let expected = expected_verdict(*law, dom);
                mismatch |= report.verdict != expected;
                out.stdout.push_str(&render_report(&report, expected, mode));
            }
            Err(e) => {
                match e {
                    LawError::DomainTooLarge { .. } => budget = true,
                    _ => semantic = true,
                }
                out.stderr.push_str(&format!("error: {e}\n"));
            }
        }
    }
    out.code = if budget {
        EXIT_BUDGET
    } else if semantic {
        EXIT_SEMANTIC
    } else if mismatch {
        EXIT_LAW_MISMATCH
    } else {
        EXIT_OK
    };
    out
}

fn render_report<T: std::fmt::Display>(
    report: &LawReport<T>,
    expected: Verdict,
    mode: OutputMode,
) -> String {
    match mode {
        OutputMode::Structured => json_line(&report.to_record(Some(expected))),
        OutputMode::Text => {
            let status = if report.verdict == expected {
                format!("as expected ({expected})")
            } else {
                format!("MISMATCH: expected {expected}")
            };
            let mut text = report.to_string();
            match text.find('\n') {
                Some(i) => text.insert_str(i, &format!("  {status}")),
                None => text.push_str(&format!("  {status}")),
            }
            text.push('\n');
            text
        }
    }
}

pub fn cmd_laws(
    shape: &Shape,
    mode: OutputMode,
    only: &[LawId],
    mags: &str,
    cfg: &CheckConfig,
) -> Outcome {
    let grid = match parse_grid(mags) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_SYNTAX, format!("--mags: {e}")),
    };
    match shape {
        Shape::Scalar(s) => match Domain::new(*s, grid) {
            Ok(dom) => run_suite(&dom, mode, only, cfg),
            Err(e) => Outcome::fail(EXIT_SEMANTIC, e),
        },
        Shape::Tuple(v) => match TupleDomain::new(v.clone(), grid) {
            Ok(dom) => run_suite(&dom, mode, only, cfg),
            Err(e) => Outcome::fail(EXIT_SEMANTIC, e),
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ToSigned,
    FromSigned,
}

#[derive(Serialize)]
struct ConvertRecord {
    input: String,
    output: String,
}

pub fn cmd_convert(shape: &Shape, mode: OutputMode, text: &str, direction: Direction) -> Outcome {
    if *shape != Shape::Scalar(2) {
        return Outcome::fail(
            EXIT_SEMANTIC,
            format!("convert needs --signs 2, got {shape}"),
        );
    }
    let (input, output) = match direction {
        Direction::ToSigned => {
            let x = match scalar_operand(text, shape) {
                Ok(x) => x,
                Err(o) => return o,
            };
            match to_signed(&x) {
                Ok(r) => (x.to_string(), r.to_string()),
                Err(e) => return Outcome::fail(EXIT_SEMANTIC, e),
            }
        }
        Direction::FromSigned => {
            let r: SignedRational = match text.parse() {
                Ok(r) => r,
                Err(e) => return Outcome::fail(EXIT_SYNTAX, e),
            };
            (r.to_string(), from_signed(&r).to_string())
        }
    };
    match mode {
        OutputMode::Text => Outcome::ok(format!("{output}\n")),
        OutputMode::Structured => Outcome::ok(json_line(&ConvertRecord { input, output })),
    }
}
