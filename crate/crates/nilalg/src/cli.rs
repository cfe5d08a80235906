//! Command-line front end.
//!
//! Subcommands: `check`, `series`, `charseq`, `grading`, `positions`,
//! `catalog`, `constraints`, `invariants`, `verify-theorems`. Algebras come
//! either from a JSON document (`--file`) or from the catalog (`--family`
//! plus parameters). Every sampling command requires an explicit `--seed`
//! and `--trials`, and all reports are byte-identical across runs with the
//! same inputs. Exit codes: 0 success, 1 check or runtime failure, 2 usage
//! error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::algebra::Algebra;
use crate::catalog::{FamilySpec, PFiliformSpec};
use crate::charseq::char_seq_algebra;
use crate::constraints::{associator_constraints, enumerate_solutions};
use crate::grading::{gradation_positions, natural_gradation, BasisSplit};
use crate::io::{document_from_algebra, emit_document, parse_algebra};
use crate::scalar::Scalar;
use crate::verify;

const ENUMERATION_BUDGET: u128 = 1 << 24;

#[derive(Parser)]
#[command(
    name = "nilalg",
    version,
    about = "Exact-arithmetic workbench for nilpotent associative algebras"
)]
struct Cli {
    /// Emit machine-readable JSON reports
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Associativity, nilpotency and nilindex of an algebra
    Check(InputArgs),
    /// Dimensions of the descending power series
    Series(InputArgs),
    /// Sampled characteristic sequence C(A)
    Charseq(SampleArgs),
    /// Dimensions of the natural gradation
    Grading(InputArgs),
    /// Gradation degrees of the f-part of the basis
    Positions(InputArgs),
    /// Emit a catalog instance as a JSON document
    Catalog(InputArgs),
    /// Extract and solve the b-coefficient system of a family spec
    Constraints(ConstraintArgs),
    /// Annihilator and commutator dimensions
    Invariants(InputArgs),
    /// Run every verification suite up to --n-max
    VerifyTheorems {
        /// Cap on the swept dimension
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Read the algebra from a JSON document
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
    /// Catalog family: null | filiform | quasi | degree-p | p-filiform
    #[arg(long)]
    family: Option<String>,
    /// Dimension n
    #[arg(long)]
    n: Option<usize>,
    /// Parameter p (degree-p and p-filiform families)
    #[arg(long)]
    p: Option<usize>,
    /// Variant index (filiform and quasi families)
    #[arg(long)]
    variant: Option<usize>,
    /// Rational parameter for quasi variant 2, e.g. 1/2
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    /// Comma-separated s-profile, e.g. 2,1,0,0 (p-filiform family)
    #[arg(long)]
    s: Option<String>,
}

#[derive(Args)]
struct SampleArgs {
    #[command(flatten)]
    input: InputArgs,
    /// RNG seed (required: sampling must be reproducible)
    #[arg(long)]
    seed: u64,
    /// Number of random samples
    #[arg(long)]
    trials: usize,
}

#[derive(Args)]
struct ConstraintArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    p: usize,
    /// Comma-separated s-profile
    #[arg(long)]
    s: String,
    /// Comma-separated grid of rational values to enumerate
    #[arg(long, default_value = "-1,0,1", allow_hyphen_values = true)]
    grid: String,
}

enum Failure {
    /// Bad arguments; reported on stderr, exit 2.
    Usage(String),
    /// A check or computation failed; reported on stdout/stderr, exit 1.
    Run(String),
}

type CmdResult = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn run_err(e: impl std::fmt::Display) -> Failure {
    Failure::Run(e.to_string())
}

/// Entry point used by both the binary and the tests.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    2
                }
            };
        }
    };
    let json = cli.json;
    let outcome = match &cli.command {
        Command::Check(input) => cmd_check(input, json, stderr),
        Command::Series(input) => cmd_series(input, json, stderr),
        Command::Charseq(sample) => cmd_charseq(sample, json, stderr),
        Command::Grading(input) => cmd_grading(input, json, stderr),
        Command::Positions(input) => cmd_positions(input, json, stderr),
        Command::Catalog(input) => cmd_catalog(input),
        Command::Constraints(cargs) => cmd_constraints(cargs, json),
        Command::Invariants(input) => cmd_invariants(input, json, stderr),
        Command::VerifyTheorems { n_max } => cmd_verify(*n_max, json),
    };
    match outcome {
        Ok(report) => {
            let _ = writeln!(stdout, "{report}");
            0
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Run(msg)) => {
            let _ = writeln!(stdout, "{msg}");
            1
        }
    }
}

fn parse_usize_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("cannot parse `{x}` as a non-negative integer")))
        })
        .collect()
}

fn parse_scalar_list(text: &str) -> Result<Vec<Scalar>, Failure> {
    text.split(',')
        .map(|x| Scalar::from_str(x.trim()).map_err(|e| usage(e.to_string())))
        .collect()
}

fn family_spec(input: &InputArgs) -> Result<FamilySpec, Failure> {
    let family = input
        .family
        .as_deref()
        .ok_or_else(|| usage("provide --file or --family"))?;
    let need_n = || input.n.ok_or_else(|| usage("--n is required"));
    match family {
        "null" => Ok(FamilySpec::NullFiliform { n: need_n()? }),
        "filiform" => Ok(FamilySpec::Filiform {
            n: need_n()?,
            variant: input.variant.ok_or_else(|| usage("--variant is required"))?,
        }),
        "quasi" => {
            let variant = input.variant.ok_or_else(|| usage("--variant is required"))?;
            let alpha = match &input.alpha {
                Some(text) => Some(Scalar::from_str(text).map_err(|e| usage(e.to_string()))?),
                None => None,
            };
            Ok(FamilySpec::QuasiFiliform {
                n: need_n()?,
                variant,
                alpha,
            })
        }
        "degree-p" => Ok(FamilySpec::DegreeP {
            n: need_n()?,
            p: input.p.ok_or_else(|| usage("--p is required"))?,
        }),
        "p-filiform" => {
            let n = need_n()?;
            let p = input.p.ok_or_else(|| usage("--p is required"))?;
            let s_text = input.s.as_deref().ok_or_else(|| usage("--s is required"))?;
            let s = parse_usize_list(s_text)?;
            let spec = PFiliformSpec::new(n, p, s).map_err(|e| usage(e.to_string()))?;
            Ok(FamilySpec::PFiliformGraded(spec))
        }
        other => Err(usage(format!(
            "unknown family `{other}` (expected null, filiform, quasi, degree-p, p-filiform)"
        ))),
    }
}

/// Loads the algebra named by `--file` or `--family`, forwarding document
/// warnings to the diagnostic stream.
fn load_algebra(input: &InputArgs, stderr: &mut dyn Write) -> Result<Algebra, Failure> {
    if let Some(path) = &input.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Run(format!("cannot read {}: {e}", path.display())))?;
        let (algebra, warnings) = parse_algebra(&text).map_err(run_err)?;
        for w in warnings {
            let _ = writeln!(stderr, "warning: {w}");
        }
        return Ok(algebra);
    }
    family_spec(input)?.build().map_err(run_err)
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("report serializes")
}

fn render_dims(dims: &[usize]) -> String {
    let body: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("({})", body.join(","))
}

fn cmd_check(input: &InputArgs, json: bool, stderr: &mut dyn Write) -> CmdResult {
    let a = load_algebra(input, stderr)?;
    let defects = a.associativity_defects();
    let nilindex = a.nilindex();
    let ok = defects.is_empty() && nilindex.is_some();
    let report = if json {
        pretty(json!({
            "associative": defects.is_empty(),
            "defect_count": defects.len(),
            "first_defect": defects.first().map(|d| vec![d.0, d.1, d.2]),
            "nilpotent": nilindex.is_some(),
            "nilindex": nilindex,
        }))
    } else {
        let assoc = if defects.is_empty() {
            "associative".to_string()
        } else {
            let d = defects[0];
            format!(
                "not associative ({} defects, first ({},{},{}))",
                defects.len(),
                d.0,
                d.1,
                d.2
            )
        };
        let nil = match nilindex {
            Some(k) => format!("nilindex {k}"),
            None => "not nilpotent".to_string(),
        };
        format!("{assoc}, {nil}")
    };
    if ok {
        Ok(report)
    } else {
        Err(Failure::Run(report))
    }
}

fn cmd_series(input: &InputArgs, json: bool, stderr: &mut dyn Write) -> CmdResult {
    let a = load_algebra(input, stderr)?;
    let series = a.power_series();
    if json {
        Ok(pretty(json!({
            "dims": series.dims(),
            "nilpotent": series.stabilized(),
        })))
    } else if series.stabilized() {
        Ok(format!("dims {}", render_dims(&series.dims())))
    } else {
        Ok(format!(
            "dims {} (stabilizes at a nonzero subspace)",
            render_dims(&series.dims())
        ))
    }
}

fn cmd_charseq(sample: &SampleArgs, json: bool, stderr: &mut dyn Write) -> CmdResult {
    let a = load_algebra(&sample.input, stderr)?;
    let c = char_seq_algebra(&a, sample.trials, sample.seed).map_err(run_err)?;
    if json {
        Ok(pretty(json!({
            "charseq": c.parts(),
            "trials": sample.trials,
            "seed": sample.seed,
        })))
    } else {
        Ok(c.to_string())
    }
}

fn cmd_grading(input: &InputArgs, json: bool, stderr: &mut dyn Write) -> CmdResult {
    let a = load_algebra(input, stderr)?;
    let g = natural_gradation(&a).map_err(run_err)?;
    if json {
        let components: Vec<Vec<Vec<String>>> = g
            .components()
            .iter()
            .map(|c| {
                c.basis()
                    .iter()
                    .map(|v| v.iter().map(Scalar::to_string).collect())
                    .collect()
            })
            .collect();
        Ok(pretty(json!({
            "dims": g.dims(),
            "components": components,
        })))
    } else {
        Ok(format!("dims {}", render_dims(g.dims())))
    }
}

fn cmd_positions(input: &InputArgs, json: bool, stderr: &mut dyn Write) -> CmdResult {
    let a = load_algebra(input, stderr)?;
    let split = BasisSplit::from_labels(&a);
    let positions = gradation_positions(&a, &split).map_err(run_err)?;
    if json {
        Ok(pretty(json!({
            "r": positions.positions(),
            "e_chain": split.e_chain,
            "f_list": split.f_list,
        })))
    } else {
        Ok(render_dims(positions.positions()))
    }
}

fn cmd_catalog(input: &InputArgs) -> CmdResult {
    if input.family.is_none() {
        return Err(usage("catalog requires --family"));
    }
    let spec = family_spec(input)?;
    let algebra = spec.build().map_err(run_err)?;
    let mut doc = document_from_algebra(&algebra);
    for (k, v) in spec.metadata() {
        doc.metadata.insert(k, serde_json::Value::String(v));
    }
    // emit_document appends a newline; the caller adds one more for the
    // report, so trim it here
    Ok(emit_document(&doc).trim_end().to_string())
}

fn cmd_constraints(cargs: &ConstraintArgs, json: bool) -> CmdResult {
    let s = parse_usize_list(&cargs.s)?;
    let spec = PFiliformSpec::new(cargs.n, cargs.p, s).map_err(|e| usage(e.to_string()))?;
    let grid = parse_scalar_list(&cargs.grid)?;
    if grid.is_empty() {
        return Err(usage("--grid must list at least one value"));
    }
    let cs = associator_constraints(&spec).map_err(run_err)?;
    let solutions = enumerate_solutions(&cs, &grid, ENUMERATION_BUDGET).map_err(run_err)?;
    if json {
        let equations: Vec<String> = cs
            .equations
            .iter()
            .map(|e| format!("{} = 0", e.render(&cs.unknowns)))
            .collect();
        let sols: Vec<Vec<String>> = solutions
            .iter()
            .map(|sol| sol.iter().map(Scalar::to_string).collect())
            .collect();
        Ok(pretty(json!({
            "unknowns": cs.unknowns,
            "equations": equations,
            "grid": grid.iter().map(Scalar::to_string).collect::<Vec<_>>(),
            "solutions": sols,
        })))
    } else {
        let mut lines = Vec::new();
        lines.push(format!("unknowns ({}):", cs.unknowns.len()));
        for u in &cs.unknowns {
            lines.push(format!("  {u}"));
        }
        lines.push(format!("equations ({}):", cs.equations.len()));
        for e in &cs.equations {
            lines.push(format!("  {} = 0", e.render(&cs.unknowns)));
        }
        let grid_s: Vec<String> = grid.iter().map(Scalar::to_string).collect();
        lines.push(format!(
            "solutions on grid {{{}}} ({}):",
            grid_s.join(","),
            solutions.len()
        ));
        for sol in &solutions {
            let pairs: Vec<String> = cs
                .unknowns
                .iter()
                .zip(sol)
                .map(|(u, v)| format!("{u}={v}"))
                .collect();
            lines.push(format!("  {}", pairs.join(", ")));
        }
        Ok(lines.join("\n"))
    }
}

fn cmd_invariants(input: &InputArgs, json: bool, stderr: &mut dyn Write) -> CmdResult {
    let a = load_algebra(input, stderr)?;
    let inv = a.annihilator_invariants();
    if json {
        Ok(pretty(json!({
            "left_annihilator": inv.left,
            "right_annihilator": inv.right,
            "two_sided_annihilator": inv.two_sided,
            "commutator": inv.commutator,
        })))
    } else {
        Ok(format!(
            "left={} right={} two-sided={} commutator={}",
            inv.left, inv.right, inv.two_sided, inv.commutator
        ))
    }
}

fn cmd_verify(n_max: usize, json: bool) -> CmdResult {
    let outcomes = verify::all_suites(n_max);
    let all_passed = outcomes.iter().all(|o| o.passed);
    let report = if json {
        let suites: Vec<serde_json::Value> = outcomes
            .iter()
            .map(|o| {
                json!({
                    "name": o.name,
                    "passed": o.passed,
                    "summary": o.summary,
                    "failures": o.failures,
                })
            })
            .collect();
        pretty(json!({
            "n_max": n_max,
            "passed": all_passed,
            "suites": suites,
        }))
    } else {
        outcomes
            .iter()
            .map(|o| o.line())
            .collect::<Vec<_>>()
            .join("\n")
    };
    if all_passed {
        Ok(report)
    } else {
        Err(Failure::Run(report))
    }
}
