//! Command-line front end. Results go to stdout, diagnostics to stderr.
//!
//! Exit codes: 0 for success (and affirmative decisions), 1 for
//! mathematical negative verdicts the caller asked to test (a non-constant
//! family under `characterize`, a curve that is not an affine image under
//! `geometry rnc`, a search run that found counterexamples), 2 for usage
//! and parse errors. All numeric output is exact rational text.

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::characterize::{characterize_laurent, characterize_poly};
use crate::error::Error;
use crate::geometry::{
    hyperplane_containment, is_affine_rnc, vanishing_invariant_report, Curve,
};
use crate::laurent::LaurentPoly;
use crate::parser::{parse_curve, parse_laurent, parse_rational, ParseError};
use crate::ratfun::check_n2_impossibility;
use crate::reduction::{reduce_both, reduce_distinct_max, reduce_distinct_min, ReductionOutcome};
use crate::search::{conjecture_search, SearchConfig};
use crate::wronskian::{classify, WronskianClass};

#[derive(Parser)]
#[command(
    name = "wronsk",
    version,
    about = "Exact Wronskians of polynomial, Laurent and rational families over Q"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the exact Wronskian determinant of a family
    Wronskian {
        /// Expressions in t, or a single JSON document {"functions": [..]}
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Classify the Wronskian: identically zero, nonzero constant, or not
    Classify {
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Gauss-like reduction to pairwise-distinct maximum/minimum degrees
    Reduce {
        #[arg(required = true)]
        exprs: Vec<String>,
        /// Reduce maximum degrees (the default)
        #[arg(long, conflicts_with_all = ["min", "both"])]
        max: bool,
        /// Reduce minimum degrees
        #[arg(long, conflicts_with_all = ["max", "both"])]
        min: bool,
        /// Run both passes with the paired degree guarantee
        #[arg(long, conflicts_with_all = ["max", "min"])]
        both: bool,
        #[arg(long)]
        json: bool,
    },
    /// Decide the nonzero-constant property and print the witness
    Characterize {
        #[arg(required = true)]
        exprs: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Geometric consequences for parametric curves
    Geometry {
        #[command(subcommand)]
        action: GeometryAction,
    },
    /// Rational functions with two or more distinct poles
    Rational {
        #[command(subcommand)]
        action: RationalAction,
    },
}

#[derive(Subcommand)]
enum GeometryAction {
    /// Find an affine hyperplane containing the curve
    Hyperplane {
        /// Curve components separated by ';' or a JSON array of strings
        curve: String,
        #[arg(long)]
        json: bool,
    },
    /// Recognize an affine image of the rational normal curve
    Rnc {
        curve: String,
        #[arg(long)]
        json: bool,
    },
    /// Curvature/torsion numerator and its vanishing report
    Invariant {
        curve: String,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum RationalAction {
    /// Verify the two-function impossibility with an exact witness
    Check2 {
        rf1: String,
        rf2: String,
        #[arg(long)]
        json: bool,
    },
    /// Seeded random search for conjecture counterexamples (n >= 3)
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long = "degree-bound", default_value_t = 3)]
        degree_bound: u32,
        /// Maximum number of distinct poles per family
        #[arg(long = "poles", default_value_t = 3)]
        poles: u32,
        #[arg(long = "coeff-bound", default_value_t = 5)]
        coeff_bound: i64,
        /// Also persist the JSON report to this file
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
}

/// Runs the CLI against explicit streams; returns the process exit code.
pub fn run<O: Write, E: Write>(args: &[String], out: &mut O, err: &mut E) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e);
                    return 0;
                }
                _ => 2,
            };
            let _ = write!(err, "{}", e);
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(failure) => {
            let _ = writeln!(err, "error: {}", failure.message);
            failure.code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::NotConstantWronskian(_)
            | Error::LinearlyDependent
            | Error::TwoConstants
            | Error::ZeroWronskian => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn dispatch<O: Write>(cli: Cli, out: &mut O) -> Result<i32, Failure> {
    match cli.command {
        Command::Wronskian { exprs, json } => {
            let fs = parse_family(&exprs)?;
            let class = classify(&fs);
            if json {
                emit(out, class_json(&class))?;
            } else {
                writeln!(out, "{}", class.determinant())?;
            }
            Ok(0)
        }
        Command::Classify { exprs, json } => {
            let fs = parse_family(&exprs)?;
            let class = classify(&fs);
            if json {
                emit(out, class_json(&class))?;
            } else {
                writeln!(out, "{}", class_human(&class))?;
            }
            Ok(0)
        }
        Command::Reduce {
            exprs,
            min,
            both,
            json,
            ..
        } => {
            let fs = parse_family(&exprs)?;
            if both {
                let (maxo, mino) = reduce_both(&fs)?;
                if json {
                    emit(out, json!({ "max": outcome_json(&maxo), "min": outcome_json(&mino) }))?;
                } else {
                    writeln!(out, "max pass:")?;
                    write_outcome(out, &maxo)?;
                    writeln!(out, "min pass:")?;
                    write_outcome(out, &mino)?;
                }
            } else {
                let outcome = if min {
                    reduce_distinct_min(&fs)?
                } else {
                    reduce_distinct_max(&fs)?
                };
                if json {
                    emit(out, outcome_json(&outcome))?;
                } else {
                    write_outcome(out, &outcome)?;
                }
            }
            Ok(0)
        }
        Command::Characterize { exprs, json } => {
            let fs = parse_family(&exprs)?;
            characterize_command(&fs, json, out)
        }
        Command::Geometry { action } => geometry_command(action, out),
        Command::Rational { action } => rational_command(action, out),
    }
}

fn characterize_command<O: Write>(
    fs: &[LaurentPoly],
    json: bool,
    out: &mut O,
) -> Result<i32, Failure> {
    let all_poly = fs.iter().all(LaurentPoly::is_polynomial);
    let result = if all_poly {
        characterize_poly(fs).map(|ch| {
            let r: Vec<i64> = (0..fs.len() as i64).collect();
            (ch.matrix_a, ch.det_a, r)
        })
    } else {
        characterize_laurent(fs).map(|ch| (ch.matrix_a, ch.det_a, ch.exponents))
    };
    match result {
        Ok((matrix_a, _det_a, r)) => {
            let class = classify(fs);
            let value = class.constant_value().expect("witness implies constant");
            if json {
                emit(
                    out,
                    json!({
                        "constant": true,
                        "value": value.to_string(),
                        "A": matrix_a.to_string_rows(),
                        "r": r,
                        "wronskian": class.determinant().to_string(),
                    }),
                )?;
            } else {
                writeln!(out, "constant: {}", value)?;
                writeln!(out, "r: {:?}", r)?;
                writeln!(out, "A:")?;
                for row in matrix_a.to_string_rows() {
                    writeln!(out, "  [{}]", row.join(", "))?;
                }
            }
            Ok(0)
        }
        Err(Error::NotConstantWronskian(class)) => {
            let w = class.determinant();
            if json {
                emit(
                    out,
                    json!({
                        "constant": false,
                        "value": Value::Null,
                        "A": Value::Null,
                        "r": Value::Null,
                        "wronskian": w.to_string(),
                    }),
                )?;
            } else {
                writeln!(out, "non-constant: {}", w)?;
            }
            Ok(1)
        }
        Err(Error::LinearlyDependent) => {
            if json {
                emit(
                    out,
                    json!({
                        "constant": false,
                        "value": Value::Null,
                        "A": Value::Null,
                        "r": Value::Null,
                        "wronskian": "0",
                    }),
                )?;
            } else {
                writeln!(out, "identically zero: the functions are linearly dependent")?;
            }
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn geometry_command<O: Write>(action: GeometryAction, out: &mut O) -> Result<i32, Failure> {
    match action {
        GeometryAction::Hyperplane { curve, json } => {
            let c = parse_curve_arg(&curve)?;
            match hyperplane_containment(&c) {
                Some(h) => {
                    if json {
                        emit(
                            out,
                            json!({
                                "found": true,
                                "normal": rationals_json(&h.normal),
                                "constant": h.constant.to_string(),
                            }),
                        )?;
                    } else {
                        writeln!(out, "normal: [{}]", join_rationals(&h.normal))?;
                        writeln!(out, "constant: {}", h.constant)?;
                    }
                    Ok(0)
                }
                None => {
                    if json {
                        emit(out, json!({ "found": false, "normal": Value::Null, "constant": Value::Null }))?;
                    } else {
                        writeln!(out, "no containing hyperplane")?;
                    }
                    Ok(1)
                }
            }
        }
        GeometryAction::Rnc { curve, json } => {
            let c = parse_curve_arg(&curve)?;
            match is_affine_rnc(&c) {
                Some((m, b)) => {
                    if json {
                        emit(
                            out,
                            json!({
                                "is_rnc": true,
                                "matrix": m.to_string_rows(),
                                "translation": rationals_json(&b),
                            }),
                        )?;
                    } else {
                        writeln!(out, "affine image of the rational normal curve")?;
                        writeln!(out, "matrix:")?;
                        for row in m.to_string_rows() {
                            writeln!(out, "  [{}]", row.join(", "))?;
                        }
                        writeln!(out, "translation: [{}]", join_rationals(&b))?;
                    }
                    Ok(0)
                }
                None => {
                    if json {
                        emit(out, json!({ "is_rnc": false, "matrix": Value::Null, "translation": Value::Null }))?;
                    } else {
                        writeln!(out, "not an affine image of the rational normal curve")?;
                    }
                    Ok(1)
                }
            }
        }
        GeometryAction::Invariant { curve, json } => {
            let c = parse_curve_arg(&curve)?;
            let report = vanishing_invariant_report(&c)?;
            if json {
                emit(
                    out,
                    json!({
                        "numerator": report.numerator.to_string(),
                        "is_constant": report.is_constant,
                        "rational_roots": rationals_json(&report.rational_roots),
                        "real_root_count": report.real_root_count,
                    }),
                )?;
            } else {
                writeln!(out, "numerator: {}", report.numerator)?;
                writeln!(out, "constant: {}", report.is_constant)?;
                writeln!(out, "rational roots: [{}]", join_rationals(&report.rational_roots))?;
                writeln!(out, "distinct real roots: {}", report.real_root_count)?;
            }
            Ok(0)
        }
    }
}

fn rational_command<O: Write>(action: RationalAction, out: &mut O) -> Result<i32, Failure> {
    match action {
        RationalAction::Check2 { rf1, rf2, json } => {
            let a = parse_rational(&rf1)?;
            let b = parse_rational(&rf2)?;
            let v = check_n2_impossibility(&a, &b)?;
            if json {
                emit(
                    out,
                    json!({
                        "is_constant": v.is_constant,
                        "shift": v.shift.to_string(),
                        "beta1": v.beta1.to_string(),
                        "k": v.k,
                        "l1": v.l1,
                        "f": v.f_linear.to_string(),
                        "predicted_order_origin": v.predicted_order_origin,
                        "predicted_order_beta1": v.predicted_order_beta1,
                        "wronskian": v.wronskian.to_string(),
                    }),
                )?;
            } else {
                writeln!(out, "not a nonzero constant (two or more distinct poles)")?;
                writeln!(out, "shift: {}", v.shift)?;
                writeln!(out, "beta1: {}, K: {}, L1: {}", v.beta1, v.k, v.l1)?;
                writeln!(out, "f: {}", v.f_linear)?;
                writeln!(
                    out,
                    "pole orders of W: {} at 0, {} at beta1",
                    v.predicted_order_origin, v.predicted_order_beta1
                )?;
                writeln!(out, "W = {}", v.wronskian)?;
            }
            Ok(0)
        }
        RationalAction::Search {
            n,
            trials,
            seed,
            degree_bound,
            poles,
            coeff_bound,
            out: out_path,
            json,
        } => {
            let config = SearchConfig {
                trials,
                degree_bound,
                pole_bound: poles,
                coeff_bound,
            };
            let report = conjecture_search(n, &config, seed)?;
            let rendered = serde_json::to_string_pretty(&report).expect("report serializes");
            if let Some(path) = out_path {
                std::fs::write(&path, &rendered)?;
            }
            if json {
                writeln!(out, "{}", rendered)?;
            } else {
                writeln!(out, "seed: {}", report.seed)?;
                writeln!(out, "trials: {}", report.trials)?;
                for (tag, count) in &report.class_counts {
                    writeln!(out, "  {}: {}", tag, count)?;
                }
                writeln!(out, "counterexamples: {}", report.counterexamples.len())?;
            }
            Ok(if report.counterexamples.is_empty() { 0 } else { 1 })
        }
    }
}

/// Positional expressions, or a single JSON document {"functions": [..]}.
fn parse_family(exprs: &[String]) -> Result<Vec<LaurentPoly>, Failure> {
    let texts: Vec<String> = if exprs.len() == 1 && exprs[0].trim_start().starts_with('{') {
        let doc: serde_json::Value = serde_json::from_str(&exprs[0]).map_err(|e| Failure {
            code: 2,
            message: format!("invalid JSON document: {}", e),
        })?;
        match doc.get("functions").and_then(|f| f.as_array()) {
            Some(items) => items
                .iter()
                .map(|v| {
                    v.as_str().map(str::to_string).ok_or_else(|| Failure {
                        code: 2,
                        message: "\"functions\" must be an array of strings".into(),
                    })
                })
                .collect::<Result<_, _>>()?,
            None => {
                return Err(Failure {
                    code: 2,
                    message: "JSON document must have a \"functions\" array".into(),
                })
            }
        }
    } else {
        exprs.to_vec()
    };
    texts
        .iter()
        .map(|t| parse_laurent(t).map_err(Failure::from))
        .collect()
}

fn parse_curve_arg(text: &str) -> Result<Curve, Failure> {
    let components = parse_curve(text)?;
    Curve::new(components).map_err(Failure::from)
}

fn class_json(class: &WronskianClass) -> Value {
    json!({
        "class": class.tag(),
        "value": class.constant_value().map(|v| v.to_string()),
        "result": class.determinant().to_string(),
    })
}

fn class_human(class: &WronskianClass) -> String {
    match class {
        WronskianClass::IdenticallyZero => "identically zero".to_string(),
        WronskianClass::NonzeroConstant(v) => format!("nonzero constant: {}", v),
        WronskianClass::NonConstant(w) => format!("non-constant: {}", w),
    }
}

fn outcome_json(outcome: &ReductionOutcome) -> Value {
    json!({
        "reduced": outcome.reduced.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "transform": outcome.transform.to_string_rows(),
        "sign": outcome.sign,
        "max_degrees": outcome.max_degrees(),
        "min_degrees": outcome.min_degrees(),
    })
}

fn write_outcome<O: Write>(out: &mut O, outcome: &ReductionOutcome) -> std::io::Result<()> {
    for p in &outcome.reduced {
        writeln!(out, "  {}", p)?;
    }
    writeln!(out, "  max degrees: {:?}", outcome.max_degrees())?;
    writeln!(out, "  min degrees: {:?}", outcome.min_degrees())?;
    writeln!(out, "  sign: {}", outcome.sign)?;
    writeln!(out, "  transform:")?;
    for row in outcome.transform.to_string_rows() {
        writeln!(out, "    [{}]", row.join(", "))?;
    }
    Ok(())
}

fn rationals_json(values: &[crate::rational::Rational]) -> Value {
    Value::Array(
        values
            .iter()
            .map(|v| Value::String(v.to_string()))
            .collect(),
    )
}

fn join_rationals(values: &[crate::rational::Rational]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn emit<O: Write>(out: &mut O, value: Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(&value).expect("serializes"))
}
