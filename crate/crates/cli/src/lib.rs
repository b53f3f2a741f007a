//! Command-line front end: parse the input grammars, dispatch to the
//! library, and render either plain text or a fixed JSON envelope.
//!
//! The envelope always carries the same five keys so consumers can rely
//! on the shape: `{command, status, result, error_code, error_message}`.
//! Rationals are serialized as strings to stay exact.

use std::cmp::Ordering;
use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use ultrareal::{
    cut_classify, hyper_ivt_root, isolate_all_roots, ivt_grid_root, odd_degree_root_with,
    parse_element, parse_hyper_poly, parse_poly, parse_rational, real_sqrt_with, sturm_count,
    CutKind, Element, Error, GridSchedule, HyperSeq, IntervalKind, LevelOutcome, Polynomial, RFunc,
    Rational, RealAlgebraic, Result, SeqExpr,
};

/// Captured run of the tool: exit status plus both output streams.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser)]
#[command(
    name = "ultrareal",
    version,
    about = "Exact arithmetic in a computable ordered field extension of the rationals",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit a machine-readable JSON envelope on stdout.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Cmd,
}

/// Which field an element belongs to: plain rationals, or rational
/// functions of the infinite unit w. Sequences are coerced into w when
/// `qw` is selected.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
enum FieldKind {
    /// Keep each element in the model its syntax selects.
    #[default]
    Q,
    /// Coerce everything into rational functions of w.
    Qw,
}

#[derive(Subcommand)]
enum Cmd {
    /// Isolate every real root of a rational polynomial.
    IsolateRoots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Count distinct real roots in the half-open interval (lo, hi].
    CountRoots {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
    },
    /// Isolate one root in (lo, hi), given a sign change at the endpoints.
    IvtRoot {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
        /// Target interval width.
        #[arg(long, default_value = "1/4294967296", allow_hyphen_values = true)]
        width: String,
    },
    /// Find a real root of an odd-degree polynomial.
    OddRoot {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        /// Target interval width.
        #[arg(long, default_value = "1/4294967296", allow_hyphen_values = true)]
        width: String,
    },
    /// Square root of a nonnegative rational.
    Sqrt {
        #[arg(allow_hyphen_values = true)]
        value: String,
        /// Target interval width.
        #[arg(long, default_value = "1/4294967296", allow_hyphen_values = true)]
        width: String,
    },
    /// Magnitude class of an element: zero, infinitesimal, appreciable, infinite.
    Classify {
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long, value_enum, default_value_t)]
        field: FieldKind,
    },
    /// Standard part of a limited element.
    Shadow {
        #[arg(allow_hyphen_values = true)]
        element: String,
        #[arg(long, value_enum, default_value_t)]
        field: FieldKind,
    },
    /// Order two elements.
    Compare {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
        #[arg(long, value_enum, default_value_t)]
        field: FieldKind,
    },
    /// Classify the Dedekind cut at the single root isolated by (lo, hi).
    CutClassify {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
    },
    /// Leveled root isolation for polynomials with coefficients in w.
    HyperIvt {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(allow_hyphen_values = true)]
        lo: String,
        #[arg(allow_hyphen_values = true)]
        hi: String,
        /// Number of doubling grid levels (2, 4, ..., 2^levels).
        #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..=63))]
        levels: u32,
    },
}

impl Cmd {
    fn name(&self) -> &'static str {
        match self {
            Cmd::IsolateRoots { .. } => "isolate-roots",
            Cmd::CountRoots { .. } => "count-roots",
            Cmd::IvtRoot { .. } => "ivt-root",
            Cmd::OddRoot { .. } => "odd-root",
            Cmd::Sqrt { .. } => "sqrt",
            Cmd::Classify { .. } => "classify",
            Cmd::Shadow { .. } => "shadow",
            Cmd::Compare { .. } => "compare",
            Cmd::CutClassify { .. } => "cut-classify",
            Cmd::HyperIvt { .. } => "hyper-ivt",
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    status: &'a str,
    result: Option<Value>,
    error_code: Option<&'a str>,
    error_message: Option<String>,
}

fn error_code(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "division_by_zero",
        Error::EventuallyZeroDivisor => "eventually_zero_divisor",
        Error::UltrafilterDependent => "ultrafilter_dependent",
        Error::NotLimited => "not_limited",
        Error::NotRationalFunction => "not_rational_function",
        Error::DegenerateInterval => "degenerate_interval",
        Error::NoSignChange => "no_sign_change",
        Error::NegativeRadicand => "negative_radicand",
        Error::UndefinedInstantiation => "undefined_instantiation",
        Error::NotIsolating => "not_isolating",
        Error::NotOddDegree => "not_odd_degree",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::Parse(_) => "parse_error",
    }
}

fn exit_code(e: &Error) -> i32 {
    if matches!(e, Error::Parse(_)) {
        2
    } else {
        3
    }
}

/// Runs the tool on `args` (including the program name) and captures the
/// result instead of touching the process: the binary and the golden
/// tests share this single entry point.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };

    let name = cli.command.name();
    match dispatch(&cli.command) {
        Ok((result, text)) => {
            let stdout = if cli.json {
                let envelope = Envelope {
                    command: name,
                    status: "ok",
                    result: Some(result),
                    error_code: None,
                    error_message: None,
                };
                format!(
                    "{}\n",
                    serde_json::to_string(&envelope).expect("serializable")
                )
            } else {
                format!("{text}\n")
            };
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => {
            let code = exit_code(&e);
            if cli.json {
                let envelope = Envelope {
                    command: name,
                    status: "error",
                    result: None,
                    error_code: Some(error_code(&e)),
                    error_message: Some(e.to_string()),
                };
                Outcome {
                    code,
                    stdout: format!(
                        "{}\n",
                        serde_json::to_string(&envelope).expect("serializable")
                    ),
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: format!("error: {e}\n"),
                }
            }
        }
    }
}

fn dispatch(cmd: &Cmd) -> Result<(Value, String)> {
    match cmd {
        Cmd::IsolateRoots { poly } => {
            let f = parse_poly(poly)?;
            let roots = isolate_all_roots(&f)?;
            let rendered: Vec<Value> = roots.iter().map(algebraic_json).collect();
            let mut text = match roots.len() {
                0 => "no real roots".to_string(),
                1 => "1 real root".to_string(),
                k => format!("{k} real roots"),
            };
            for root in &roots {
                text.push_str("\n  ");
                text.push_str(&algebraic_text(root));
            }
            Ok((json!({ "count": roots.len(), "roots": rendered }), text))
        }
        Cmd::CountRoots { poly, lo, hi } => {
            let f = parse_poly(poly)?;
            let lo = parse_rational(lo)?;
            let hi = parse_rational(hi)?;
            let count = sturm_count(&f, &lo, &hi)?;
            Ok((json!(count), count.to_string()))
        }
        Cmd::IvtRoot {
            poly,
            lo,
            hi,
            width,
        } => {
            let f = parse_poly(poly)?;
            let lo = parse_rational(lo)?;
            let hi = parse_rational(hi)?;
            let width = parse_rational(width)?;
            let iv = ivt_grid_root(&f, &lo, &hi, &width)?;
            Ok(match iv.kind() {
                IntervalKind::ExactRoot => (
                    json!({ "kind": "exact", "root": iv.lo().to_string() }),
                    format!("exact root: {}", iv.lo()),
                ),
                IntervalKind::SignChange => (
                    json!({
                        "kind": "sign_change",
                        "lo": iv.lo().to_string(),
                        "hi": iv.hi().to_string(),
                    }),
                    format!(
                        "sign change on [{}, {}] (width {})",
                        iv.lo(),
                        iv.hi(),
                        iv.width()
                    ),
                ),
            })
        }
        Cmd::OddRoot { poly, width } => {
            let f = parse_poly(poly)?;
            let width = parse_rational(width)?;
            let root = odd_degree_root_with(&f, &width)?;
            Ok((algebraic_json(&root), algebraic_text(&root)))
        }
        Cmd::Sqrt { value, width } => {
            let q = parse_rational(value)?;
            let width = parse_rational(width)?;
            let root = real_sqrt_with(&q, &width)?;
            Ok((algebraic_json(&root), algebraic_text(&root)))
        }
        Cmd::Classify { element, field } => {
            let class = match coerced(element, *field)? {
                Coerced::RFunc(v) => v.classify(),
                Coerced::Seq(s) => s.classify()?,
            };
            Ok((json!(class.to_string()), class.to_string()))
        }
        Cmd::Shadow { element, field } => {
            let shadow = match coerced(element, *field)? {
                Coerced::RFunc(v) => v.shadow()?,
                Coerced::Seq(s) => s.shadow()?,
            };
            Ok((json!(shadow.to_string()), shadow.to_string()))
        }
        Cmd::Compare { left, right, field } => {
            let order = compare_elements(left, right, *field)?;
            let word = match order {
                Ordering::Less => "less",
                Ordering::Equal => "equal",
                Ordering::Greater => "greater",
            };
            Ok((json!(word), word.to_string()))
        }
        Cmd::CutClassify { poly, lo, hi } => {
            let f = parse_poly(poly)?;
            let lo = parse_rational(lo)?;
            let hi = parse_rational(hi)?;
            let alpha = RealAlgebraic::new(&f, lo, hi)?;
            let kind = cut_classify(&alpha);
            Ok(match kind {
                CutKind::MaxInLower => {
                    let value = alpha
                        .rational_value()
                        .expect("a cut with a maximum sits at a rational point");
                    (
                        json!({ "cut": "max_in_lower", "value": value.to_string() }),
                        format!("max in lower at {value}"),
                    )
                }
                CutKind::Gap => (json!({ "cut": "gap" }), "gap".to_string()),
                CutKind::Jump | CutKind::MinInUpper => {
                    unreachable!("never produced over a dense field")
                }
            })
        }
        Cmd::HyperIvt {
            poly,
            lo,
            hi,
            levels,
        } => {
            let f = parse_hyper_poly(poly)?;
            let lo = parse_rational(lo)?;
            let hi = parse_rational(hi)?;
            let schedule = GridSchedule::powers_of_two(*levels);
            let outcome = hyper_ivt_root(&f, &lo, &hi, &schedule)?;

            let mut level_values = Vec::new();
            let mut text_lines = Vec::new();
            for level in &outcome.levels {
                let (value, line) = match &level.outcome {
                    LevelOutcome::Isolated {
                        interval,
                        midpoint,
                        exact_hit,
                    } => {
                        if *exact_hit {
                            (
                                json!({ "kind": "exact", "root": midpoint.to_string() }),
                                format!("level {}: exact root {midpoint}", level.level),
                            )
                        } else {
                            (
                                json!({
                                    "kind": "isolated",
                                    "lo": interval.lo().to_string(),
                                    "hi": interval.hi().to_string(),
                                    "midpoint": midpoint.to_string(),
                                }),
                                format!(
                                    "level {}: [{}, {}] (midpoint {})",
                                    level.level,
                                    interval.lo(),
                                    interval.hi(),
                                    midpoint
                                ),
                            )
                        }
                    }
                    LevelOutcome::UndefinedAt => (
                        json!({ "kind": "pole" }),
                        format!("level {}: skipped (coefficient pole)", level.level),
                    ),
                    LevelOutcome::NoBracket => (
                        json!({ "kind": "no_bracket" }),
                        format!("level {}: skipped (no sign change)", level.level),
                    ),
                };
                level_values.push(json!({
                    "level": level.level,
                    "width": level.width.to_string(),
                    "outcome": value,
                }));
                text_lines.push(line);
            }

            let class = outcome.residual_class;
            let bound = outcome.residual_bound.as_ref().map(|b| b.to_string());
            let mut text = text_lines.join("\n");
            text.push_str(&format!("\nresidual: {class}"));
            if let Some(b) = &bound {
                text.push_str(&format!(" (bound {b})"));
            }
            Ok((
                json!({
                    "levels": level_values,
                    "residual": { "class": class.to_string(), "bound": bound },
                }),
                text,
            ))
        }
    }
}

fn algebraic_json(root: &RealAlgebraic) -> Value {
    match root.exact_value() {
        Some(v) => json!({ "kind": "exact", "value": v.to_string() }),
        None => {
            let iv = root.interval();
            json!({
                "kind": "isolated",
                "lo": iv.lo().to_string(),
                "hi": iv.hi().to_string(),
                "defining": root.defining().to_string(),
            })
        }
    }
}

fn algebraic_text(root: &RealAlgebraic) -> String {
    match root.exact_value() {
        Some(v) => v.to_string(),
        None => {
            let iv = root.interval();
            format!(
                "in [{}, {}] (defining {})",
                iv.lo(),
                iv.hi(),
                root.defining()
            )
        }
    }
}

/// An element after the `--field` policy is applied: `qw` coerces
/// sequences to rational functions (surfacing failure when the sequence
/// is not one), `q` keeps the syntactic model.
enum Coerced {
    RFunc(RFunc),
    Seq(HyperSeq),
}

fn coerced(text: &str, field: FieldKind) -> Result<Coerced> {
    let element = parse_element(text)?;
    Ok(match (field, element) {
        (_, Element::Rational(q)) => Coerced::RFunc(RFunc::from(q)),
        (_, Element::RFunc(v)) => Coerced::RFunc(v),
        (FieldKind::Qw, Element::Seq(s)) => Coerced::RFunc(s.to_rfunc()?),
        (FieldKind::Q, Element::Seq(s)) => Coerced::Seq(s),
    })
}

fn compare_elements(left: &str, right: &str, field: FieldKind) -> Result<Ordering> {
    match (coerced(left, field)?, coerced(right, field)?) {
        (Coerced::RFunc(a), Coerced::RFunc(b)) => Ok(a.compare(&b)),
        (Coerced::Seq(a), Coerced::Seq(b)) => a.compare(&b),
        (Coerced::RFunc(a), Coerced::Seq(b)) => rfunc_seq(&a).compare(&b),
        (Coerced::Seq(a), Coerced::RFunc(b)) => a.compare(&rfunc_seq(&b)),
    }
}

/// Reads a rational function of w as the sequence of its values at
/// n = 1, 2, ... — the substitution w -> n.
fn rfunc_seq(v: &RFunc) -> HyperSeq {
    let expr = if v.denominator() == &Polynomial::one() {
        poly_expr(v.numerator())
    } else {
        SeqExpr::Div(
            Box::new(poly_expr(v.numerator())),
            Box::new(poly_expr(v.denominator())),
        )
    };
    // A nonzero polynomial denominator vanishes at finitely many indices,
    // so the sequence is eventually well defined.
    HyperSeq::new(expr).expect("polynomial denominator")
}

fn poly_expr(p: &Polynomial<Rational>) -> SeqExpr {
    let coeffs = p.coeffs();
    match coeffs.last() {
        None => SeqExpr::constant(Rational::from(0i64)),
        Some(lead) => {
            let mut acc = SeqExpr::constant(lead.clone());
            for c in coeffs.iter().rev().skip(1) {
                acc = SeqExpr::Add(
                    Box::new(SeqExpr::Mul(Box::new(acc), Box::new(SeqExpr::Index))),
                    Box::new(SeqExpr::constant(c.clone())),
                );
            }
            acc
        }
    }
}
