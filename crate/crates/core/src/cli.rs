//! Command-line front end: argument parsing, the end-to-end pipeline and
//! text or JSON rendering.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use crate::boolfn::{Budget, Interpretation, RSFunctionSpec};
use crate::error::{Error, Result};
use crate::linalg::{minimal_polynomial, BigPoly, MinPolyMethod};
use crate::recursion::{display_weights, verify_recursion, RecursionSpec, TaggedWeight, VerificationReport, WeightMethod};
use crate::rules::{build_rules_matrix, MatrixBudget};

/// Largest enumeration budget accepted on the command line.
pub const MAX_BUDGET_N: u32 = 32;
/// Largest operation-state width accepted on the command line.
pub const MAX_MATRIX_WIDTH: u32 = 24;
/// Upper end of `--verify` when no value is given.
pub const DEFAULT_VERIFY_HI: u32 = 22;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Compute the Hamming-weight recursion of a rotation symmetric Boolean
/// function given by its generating monomials.
#[derive(Debug, Parser)]
#[command(name = "rotsym", version)]
pub struct Args {
    /// Generators separated by ';', indices by ',', e.g. "1,2,6;1,2;1,6".
    pub spec: String,
    /// Number of weights to print, starting at n = max top index + 1.
    #[arg(long, value_name = "N")]
    pub weights: Option<usize>,
    /// Check the recursion against enumerated weights up to N_HI.
    #[arg(long, value_name = "N_HI", num_args = 0..=1, default_missing_value = "22")]
    pub verify: Option<u32>,
    #[arg(long, default_value = "orbit-distinct", value_parser = parse_interpretation)]
    pub interpretation: Interpretation,
    #[arg(long, default_value = "auto", value_parser = parse_method)]
    pub minpoly: MinPolyMethod,
    #[arg(long, value_enum, default_value = "text")]
    pub format: OutputFormat,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Largest n whose truth table may be enumerated.
    #[arg(long, default_value_t = 28)]
    pub budget_n: u32,
    /// Largest operation-state width for the rules matrix.
    #[arg(long, default_value_t = MAX_MATRIX_WIDTH)]
    pub matrix_width: u32,
    /// Write the pruned rules matrix as sorted "row col value" lines.
    #[arg(long, value_name = "PATH")]
    pub dump_matrix: Option<PathBuf>,
}

fn parse_interpretation(s: &str) -> std::result::Result<Interpretation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_method(s: &str) -> std::result::Result<MinPolyMethod, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub spec: RSFunctionSpec,
    pub weights_count: Option<usize>,
    pub verify: Option<u32>,
    pub budget: Budget,
    pub matrix_budget: MatrixBudget,
    pub interpretation: Interpretation,
    pub method: MinPolyMethod,
    pub format: OutputFormat,
    pub seed: u64,
    pub dump_matrix: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(spec: RSFunctionSpec) -> Self {
        RunConfig {
            spec,
            weights_count: None,
            verify: None,
            budget: Budget::default(),
            matrix_budget: MatrixBudget::default(),
            interpretation: Interpretation::default(),
            method: MinPolyMethod::default(),
            format: OutputFormat::default(),
            seed: 1,
            dump_matrix: None,
        }
    }

    pub fn from_args(args: &Args) -> Result<Self> {
        if args.budget_n > MAX_BUDGET_N {
            return Err(Error::InvalidSpec(format!(
                "--budget-n {} exceeds the hard cap {MAX_BUDGET_N}",
                args.budget_n
            )));
        }
        if args.matrix_width > MAX_MATRIX_WIDTH {
            return Err(Error::InvalidSpec(format!(
                "--matrix-width {} exceeds the hard cap {MAX_MATRIX_WIDTH}",
                args.matrix_width
            )));
        }
        Ok(RunConfig {
            spec: parse_spec(&args.spec)?,
            weights_count: args.weights,
            verify: args.verify,
            budget: Budget { max_n: args.budget_n },
            matrix_budget: MatrixBudget { max_width: args.matrix_width },
            interpretation: args.interpretation,
            method: args.minpoly,
            format: args.format,
            seed: args.seed,
            dump_matrix: args.dump_matrix.clone(),
        })
    }
}

pub fn parse_spec(text: &str) -> Result<RSFunctionSpec> {
    text.trim().parse()
}

/// Everything one invocation computes. Absent matrix fields mean the pure
/// linear case, which needs no matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunResult {
    pub spec: String,
    pub generators: Vec<Vec<u32>>,
    pub rs_minus_t: u32,
    pub raw_dimension: Option<usize>,
    pub pruned_dimension: Option<usize>,
    pub method: Option<MinPolyMethod>,
    pub minimal_polynomial: Option<BigPoly>,
    pub x_multiplicity: Option<usize>,
    pub reduced_polynomial: BigPoly,
    pub order: usize,
    pub recursion: RecursionSpec,
    pub interpretation: Interpretation,
    pub weights: Vec<TaggedWeight>,
    pub verification: Option<VerificationReport>,
}

pub fn run_pipeline(config: &RunConfig) -> Result<RunResult> {
    let spec = &config.spec;
    let mut result = if spec.is_pure_linear() {
        // The linear function x_1 + ... + x_n has weight 2^(n-1).
        let q = BigPoly::from_i64(&[-2, 1]);
        RunResult {
            spec: spec.to_string(),
            generators: generator_lists(spec),
            rs_minus_t: 0,
            raw_dimension: None,
            pruned_dimension: None,
            method: None,
            minimal_polynomial: None,
            x_multiplicity: None,
            recursion: RecursionSpec::from_polynomial(&q, 1)?,
            order: 1,
            reduced_polynomial: q,
            interpretation: config.interpretation,
            weights: Vec::new(),
            verification: None,
        }
    } else {
        let rules = build_rules_matrix(spec, config.matrix_budget)?;
        if let Some(path) = &config.dump_matrix {
            std::fs::write(path, rules.matrix().to_triplet_text())
                .map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))?;
        }
        let method = config.method.resolve(rules.dimension());
        let p = minimal_polynomial(rules.matrix(), method, config.seed)?;
        let (q, k) = p.strip_x_factor()?;
        let recursion = RecursionSpec::from_polynomial(&q, spec.max_top() + 1)?;
        RunResult {
            spec: spec.to_string(),
            generators: generator_lists(spec),
            rs_minus_t: spec.state_width(),
            raw_dimension: Some(rules.raw_dimension()),
            pruned_dimension: Some(rules.dimension()),
            method: Some(method),
            minimal_polynomial: Some(p),
            x_multiplicity: Some(k),
            order: recursion.order(),
            recursion,
            reduced_polynomial: q,
            interpretation: config.interpretation,
            weights: Vec::new(),
            verification: None,
        }
    };
    if let Some(count) = config.weights_count {
        result.weights = if spec.is_pure_linear() {
            linear_weights(count)
        } else {
            display_weights(spec, &result.recursion, count, config.interpretation, config.budget)?
        };
    }
    if let Some(n_hi) = config.verify {
        let n_lo = spec.max_top();
        result.verification = Some(verify_recursion(
            spec,
            &result.recursion,
            n_lo,
            n_hi.max(n_lo),
            config.interpretation,
            config.budget,
        )?);
    }
    Ok(result)
}

fn linear_weights(count: usize) -> Vec<TaggedWeight> {
    (0..count)
        .map(|i| TaggedWeight {
            n: i as u32 + 1,
            value: BigInt::from(1) << i,
            method: if i == 0 { WeightMethod::Brute } else { WeightMethod::Propagated },
        })
        .collect()
}

fn generator_lists(spec: &RSFunctionSpec) -> Vec<Vec<u32>> {
    spec.generators().iter().map(|g| g.indices().to_vec()).collect()
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidPattern(_) | Error::InvalidSpec(_) | Error::Parse(_) => EXIT_INVALID,
        Error::EnumerationBudget { .. }
        | Error::MatrixBudget { .. }
        | Error::InitialConditionsInfeasible { .. }
        | Error::WeightOutOfRange { .. } => EXIT_BUDGET,
        _ => EXIT_INTERNAL,
    }
}

/// Runs the pipeline and renders it. Errors are rendered as a message,
/// paired with their exit code.
pub fn run(config: &RunConfig) -> (String, i32) {
    match run_pipeline(config) {
        Ok(result) => (render(&result, config.format), EXIT_OK),
        Err(e) => (format!("error: {e}\n"), exit_code(&e)),
    }
}

pub fn render(result: &RunResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(result).expect("result serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => render_text(result),
    }
}

fn braces(spec: &[Vec<u32>]) -> String {
    let inner: Vec<String> = spec
        .iter()
        .map(|g| format!("{{{}}}", g.iter().map(u32::to_string).collect::<Vec<_>>().join(",")))
        .collect();
    format!("{{{}}}", inner.join(","))
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn render_text(r: &RunResult) -> String {
    let mut out = String::new();
    let fcns = braces(&r.generators);
    match (&r.minimal_polynomial, r.raw_dimension, r.pruned_dimension) {
        (Some(p), Some(raw), Some(pruned)) => {
            let _ = writeln!(out, "Rs - t = {}; rules matrix {raw} x {raw}, pruned to {pruned} x {pruned}", r.rs_minus_t);
            let _ = writeln!(out, "Minimal Polynomial of the rules matrix for the sum of {fcns}:");
            let _ = writeln!(out, "{p}");
            let _ = writeln!(out, "Which reduces to {}", r.reduced_polynomial);
        }
        _ => {
            let _ = writeln!(out, "The recursion for the linear RS function x1+x2+...+xn is 2");
        }
    }
    let _ = writeln!(out, "Recursion of order {}: ({})", r.order, join(&r.recursion.coefficients));
    if !r.weights.is_empty() {
        let values: Vec<&BigInt> = r.weights.iter().map(|w| &w.value).collect();
        let _ = writeln!(
            out,
            "The first {} weights (starting with n={}) are {{{}}}",
            r.weights.len(),
            r.weights[0].n,
            join(&values)
        );
        let replaced: Vec<u32> = r
            .weights
            .iter()
            .filter(|w| w.method == WeightMethod::ShortReplaced)
            .map(|w| w.n)
            .collect();
        if !replaced.is_empty() {
            let _ = writeln!(out, "Short-orbit positions recomputed ({}): n = {}", r.interpretation, join(&replaced));
        }
    }
    if let Some(v) = &r.verification {
        let _ = writeln!(out, "Verification over n = {}..={} ({}):", v.n_lo, v.n_hi, v.interpretation);
        if v.residuals.is_empty() {
            let _ = writeln!(out, "  range too short for a recursion of order {}", r.order);
        } else if v.nonzero.is_empty() {
            let _ = writeln!(out, "  all {} residuals vanish", v.residuals.len());
        } else {
            let _ = writeln!(out, "  nonzero residuals at n = {}", join(&v.nonzero));
        }
        match v.holds_from {
            Some(n) => {
                let _ = writeln!(out, "  holds from n = {n} (asserted from {})", v.valid_from);
            }
            None => {
                let _ = writeln!(out, "  no vanishing tail in range (asserted from {})", v.valid_from);
            }
        }
        if !v.short_n.is_empty() {
            let _ = writeln!(out, "  short orbits at n = {}", join(&v.short_n));
        }
    }
    out
}

/// Entry point for the binary.
pub fn main_with_args(args: &Args) -> i32 {
    let config = match RunConfig::from_args(args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return exit_code(&e);
        }
    };
    let (text, code) = run(&config);
    if code == EXIT_OK {
        print!("{text}");
    } else {
        eprint!("{text}");
    }
    code
}
