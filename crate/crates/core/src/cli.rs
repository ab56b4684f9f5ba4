//! Command-line surface. [`run`] renders a report for a parsed [`Cli`] and
//! says whether every check in it passed; the binary only prints and exits.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classify::{
    classify, closed_form_spectrum, find_minimal, scan_interval, ClassificationResult,
    AGREEMENT_TOL,
};
use crate::eigen::{expand, jacobi_eigen, DEFAULT_CLUSTER_TOL};
use crate::orbit::{
    action_spec, spectrum_report_with_tol, ActionSpec, ActionType, SpectrumReport,
};
use crate::roots::linspace;
use crate::verify::{algebra_suite, CheckResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "g2orbits", version, about = "Orbit geometry of cohomogeneity-one actions on G2 and SO(7)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<std::path::PathBuf>,

    /// Eigenvalues closer than this are merged into one principal curvature.
    #[arg(long, default_value_t = DEFAULT_CLUSTER_TOL, global = true)]
    pub cluster_tol: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the octonion, Lie-bracket and triality identities.
    VerifyAlgebra,
    /// Shape operator and principal curvatures of one principal orbit.
    Orbit(OrbitArgs),
    /// Mean curvature, |A|² and principal curvatures along the parameter range.
    Scan(ScanArgs),
    /// Minimal, austere and biharmonic orbits, with singular orbit dimensions.
    Classify(TypeArg),
    /// Computed versus closed-form principal curvatures at sample parameters.
    Tables(TypeArg),
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub action_type: ActionType,
    #[command(flatten)]
    pub param: Param,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct Param {
    /// Geodesic parameter.
    #[arg(long)]
    pub t: Option<f64>,
    /// Section parameter, converted by the action's section ratio.
    #[arg(long)]
    pub s: Option<f64>,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(long = "type", value_name = "TYPE")]
    pub action_type: ActionType,
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
}

#[derive(Debug, Args)]
pub struct TypeArg {
    /// Restrict to one action type; all four when omitted.
    #[arg(long = "type", value_name = "TYPE")]
    pub action_type: Option<ActionType>,
}

/// A rendered report.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: String,
    pub success: bool,
}

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_string(header: &[String], rows: &[Vec<String>]) -> Result<String, String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).map_err(|e| e.to_string())?;
    for r in rows {
        w.write_record(r).map_err(|e| e.to_string())?;
    }
    let bytes = w.into_inner().map_err(|e| e.to_string())?;
    String::from_utf8(bytes).map_err(|e| e.to_string())
}

fn json_string(meta: Value, rows: Vec<Value>) -> String {
    let mut s = serde_json::to_string_pretty(&json!({ "meta": meta, "rows": rows }))
        .expect("JSON values serialize");
    s.push('\n');
    s
}

fn types(arg: &TypeArg) -> Vec<ActionType> {
    arg.action_type.map_or_else(|| ActionType::ALL.to_vec(), |t| vec![t])
}

/// Executes a command. `Err` carries a diagnostic for numerical failures.
pub fn run(cli: &Cli) -> Result<Outcome, String> {
    match &cli.command {
        Command::VerifyAlgebra => Ok(verify_algebra(cli.format)),
        Command::Orbit(args) => orbit(cli, args),
        Command::Scan(args) => scan(cli, args),
        Command::Classify(args) => classify_cmd(cli, args),
        Command::Tables(args) => tables(cli, args),
    }
}

fn verify_algebra(format: Format) -> Outcome {
    let results = algebra_suite();
    let success = results.iter().all(|r| r.passed);
    let report = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(
                    s,
                    "{} {:<40} cases {:>6}  max defect {:.3e}  (tol {:.0e})",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.cases,
                    r.max_defect,
                    r.tolerance
                );
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let _ = writeln!(s, "{} groups, {} failed", results.len(), failed);
            s
        }
        Format::Csv => {
            let header = ["name", "passed", "cases", "max_defect", "tolerance"].map(String::from);
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r: &CheckResult| {
                    vec![r.name.to_string(), r.passed.to_string(), r.cases.to_string(), num(r.max_defect), num(r.tolerance)]
                })
                .collect();
            csv_string(&header, &rows).unwrap_or_else(|e| e)
        }
        Format::Json => json_string(
            json!({ "command": "verify-algebra", "passed": success }),
            results.iter().map(|r| serde_json::to_value(r).expect("serializable")).collect(),
        ),
    };
    Outcome { report, success }
}

fn resolve_t(spec: &ActionSpec, p: &Param) -> f64 {
    match (p.t, p.s) {
        (Some(t), _) => t,
        (None, Some(s)) => spec.t_of_s(s),
        (None, None) => unreachable!("clap requires one of --t and --s"),
    }
}

fn orbit(cli: &Cli, args: &OrbitArgs) -> Result<Outcome, String> {
    let spec = action_spec(args.action_type);
    let t = resolve_t(&spec, &args.param);
    let r = spectrum_report_with_tol(&spec, t, cli.cluster_tol).map_err(|e| e.to_string())?;
    let report = match cli.format {
        Format::Text => orbit_text(&r),
        Format::Csv => {
            let header = ["type", "t", "s", "orbit_dim", "mean_curvature", "norm_sq", "austere", "value", "multiplicity"]
                .map(String::from);
            let rows: Vec<Vec<String>> = r
                .curvatures
                .iter()
                .map(|&(v, m)| {
                    vec![
                        r.action_type.to_string(),
                        num(r.t),
                        num(r.s),
                        r.orbit_dim.to_string(),
                        num(r.mean_curvature),
                        num(r.norm_sq),
                        r.austere.to_string(),
                        num(v),
                        m.to_string(),
                    ]
                })
                .collect();
            csv_string(&header, &rows)?
        }
        Format::Json => json_string(
            json!({
                "command": "orbit",
                "type": r.action_type,
                "t": r.t,
                "s": r.s,
                "orbit_dim": r.orbit_dim,
                "mean_curvature": r.mean_curvature,
                "norm_sq": r.norm_sq,
                "austere": r.austere,
                "cluster_ambiguous": r.cluster_ambiguous,
                "cluster_tol": cli.cluster_tol,
            }),
            r.curvatures.iter().map(|&(v, m)| json!({ "value": v, "multiplicity": m })).collect(),
        ),
    };
    Ok(Outcome { report, success: true })
}

fn orbit_text(r: &SpectrumReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "type {}  t = {:.12}  s = {:.12}", r.action_type, r.t, r.s);
    let _ = writeln!(s, "orbit dimension   {}", r.orbit_dim);
    let _ = writeln!(s, "mean curvature    {:.12}", r.mean_curvature);
    let _ = writeln!(s, "|A|^2             {:.12}", r.norm_sq);
    let _ = writeln!(s, "austere           {}", r.austere);
    if r.cluster_ambiguous {
        let _ = writeln!(s, "warning: principal curvatures nearly coincide, multiplicities may be ambiguous");
    }
    let _ = writeln!(s, "principal curvatures:");
    for &(v, m) in &r.curvatures {
        let _ = writeln!(s, "  {v:>+20.12}  x{m}");
    }
    s
}

struct ScanRow {
    t: f64,
    s: f64,
    dim: usize,
    mean_curvature: f64,
    norm_sq: f64,
    eigenvalues: Vec<f64>,
}

fn scan(cli: &Cli, args: &ScanArgs) -> Result<Outcome, String> {
    let spec = action_spec(args.action_type);
    let (lo, hi) = scan_interval(&spec);
    let ts = linspace(lo, hi, args.samples);
    let rows: Vec<ScanRow> = ts
        .par_iter()
        .map(|&t| {
            let r = spectrum_report_with_tol(&spec, t, cli.cluster_tol).map_err(|e| e.to_string())?;
            let eigenvalues = jacobi_eigen(&r.shape).map_err(|e| e.to_string())?.values;
            Ok(ScanRow { t, s: r.s, dim: r.orbit_dim, mean_curvature: r.mean_curvature, norm_sq: r.norm_sq, eigenvalues })
        })
        .collect::<Result<_, String>>()?;
    let n_eig = spec.principal_dim();
    let report = match cli.format {
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "type {}: {} samples on [{lo:.6}, {hi:.6}]", spec.action_type, rows.len());
            let _ = writeln!(s, "{:>14} {:>14} {:>4} {:>18} {:>18}", "t", "s", "dim", "mean curvature", "|A|^2");
            for r in &rows {
                let _ = writeln!(s, "{:>14.10} {:>14.10} {:>4} {:>18.10} {:>18.10}", r.t, r.s, r.dim, r.mean_curvature, r.norm_sq);
            }
            s
        }
        Format::Csv => {
            let mut header: Vec<String> = ["t", "s", "dim", "mean_curvature", "norm_sq"].map(String::from).to_vec();
            header.extend((0..n_eig).map(|i| format!("eig_{i}")));
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut v = vec![num(r.t), num(r.s), r.dim.to_string(), num(r.mean_curvature), num(r.norm_sq)];
                    v.extend(r.eigenvalues.iter().map(|&x| num(x)));
                    v
                })
                .collect();
            csv_string(&header, &body)?
        }
        Format::Json => json_string(
            json!({
                "command": "scan",
                "type": spec.action_type,
                "samples": rows.len(),
                "t_min": lo,
                "t_max": hi,
                "section_ratio": spec.section_ratio,
                "einstein_constant": spec.einstein_constant,
            }),
            rows.iter()
                .map(|r| {
                    json!({
                        "t": r.t, "s": r.s, "dim": r.dim,
                        "mean_curvature": r.mean_curvature, "norm_sq": r.norm_sq,
                        "eigenvalues": r.eigenvalues,
                    })
                })
                .collect(),
        ),
    };
    Ok(Outcome { report, success: true })
}

fn classify_cmd(cli: &Cli, args: &TypeArg) -> Result<Outcome, String> {
    let results: Vec<ClassificationResult> = types(args)
        .par_iter()
        .map(|&ty| classify(&action_spec(ty)).map_err(|e| format!("type {ty}: {e}")))
        .collect::<Result<_, String>>()?;
    let success = results.iter().all(ClassificationResult::passes);
    let list = |v: &[f64]| v.iter().map(|x| format!("{x:.12}")).collect::<Vec<_>>().join(", ");
    let report = match cli.format {
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(s, "type {}", r.action_type);
                let dims: Vec<String> = r.singular_orbits.iter().map(|o| format!("{} at t = {:.6}", o.dim, o.t)).collect();
                let _ = writeln!(s, "  principal orbit dimension {}", r.principal_dim);
                let _ = writeln!(s, "  singular orbits           {}", dims.join(", "));
                let _ = writeln!(s, "  minimal                   t = {:.12}  s = {:.12}", r.minimal_t, r.minimal_s);
                let _ = writeln!(s, "    reference               {} = {:.12}", r.reference.minimal_formula, r.reference.minimal_t);
                let _ = writeln!(s, "  minimal orbit austere     {}", r.minimal_austere);
                let _ = writeln!(s, "  proper biharmonic         t = [{}]", list(&r.biharmonic_t));
                let _ = writeln!(s, "                            s = [{}]", list(&r.biharmonic_s));
                let _ = writeln!(s, "    reference               {} = [{}]", r.reference.biharmonic_formula, list(&r.reference.biharmonic_t));
                let _ = writeln!(s, "    solved from |A|^2       [{}]", list(&r.algebraic_biharmonic_t));
                for note in &r.discrepancy_notes {
                    let _ = writeln!(s, "  note: {note}");
                }
                let _ = writeln!(s, "  {}", if r.passes() { "PASS" } else { "FAIL" });
            }
            s
        }
        Format::Csv => {
            let header = [
                "type", "principal_dim", "singular_dims", "minimal_t", "minimal_s", "reference_minimal_t",
                "minimal_austere", "biharmonic_t", "biharmonic_s", "reference_biharmonic_t", "notes", "passed",
            ]
            .map(String::from);
            let joined = |v: &[f64]| v.iter().map(|&x| num(x)).collect::<Vec<_>>().join(";");
            let rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        r.action_type.to_string(),
                        r.principal_dim.to_string(),
                        r.singular_orbits.iter().map(|o| o.dim.to_string()).collect::<Vec<_>>().join(";"),
                        num(r.minimal_t),
                        num(r.minimal_s),
                        num(r.reference.minimal_t),
                        r.minimal_austere.to_string(),
                        joined(&r.biharmonic_t),
                        joined(&r.biharmonic_s),
                        joined(&r.reference.biharmonic_t),
                        r.discrepancy_notes.join(" | "),
                        r.passes().to_string(),
                    ]
                })
                .collect();
            csv_string(&header, &rows)?
        }
        Format::Json => json_string(
            json!({ "command": "classify", "passed": success, "agreement_tol": AGREEMENT_TOL }),
            results
                .iter()
                .map(|r| {
                    let mut v = serde_json::to_value(r).expect("serializable");
                    v["passed"] = json!(r.passes());
                    v
                })
                .collect(),
        ),
    };
    Ok(Outcome { report, success })
}

/// Sample parameters: interior fractions of the range plus the minimal orbit.
fn table_parameters(spec: &ActionSpec) -> Vec<f64> {
    let (lo, hi) = spec.t_range;
    let mut ts: Vec<f64> = [0.15, 0.35, 0.6, 0.85].iter().map(|f| lo + f * (hi - lo)).collect();
    if let Ok(t) = find_minimal(spec) {
        ts.push(t);
    }
    ts.sort_by(f64::total_cmp);
    ts
}

fn tables(cli: &Cli, args: &TypeArg) -> Result<Outcome, String> {
    struct Row {
        ty: ActionType,
        t: f64,
        s: f64,
        computed: f64,
        closed: f64,
        multiplicity: usize,
    }
    let mut rows = Vec::new();
    let mut success = true;
    for ty in types(args) {
        let spec = action_spec(ty);
        for t in table_parameters(&spec) {
            let r = spectrum_report_with_tol(&spec, t, cli.cluster_tol).map_err(|e| e.to_string())?;
            let closed = closed_form_spectrum(ty, t, cli.cluster_tol).map_err(|e| e.to_string())?;
            let closed_values = expand(&closed);
            if r.multiplicities() != closed.iter().map(|c| c.1).collect::<Vec<_>>() {
                success = false;
            }
            // Pair clusters by their expanded positions so each row carries one multiplicity.
            let mut offset = 0;
            for &(v, m) in &r.curvatures {
                let c = closed_values.get(offset).copied().unwrap_or(f64::NAN);
                rows.push(Row { ty, t, s: r.s, computed: v, closed: c, multiplicity: m });
                offset += m;
            }
        }
    }
    for r in &rows {
        if !((r.computed - r.closed).abs() < AGREEMENT_TOL) {
            success = false;
        }
    }
    let family = |ty: ActionType| format!("closed-form principal curvatures of the type {ty} principal orbits");
    let report = match cli.format {
        Format::Text => {
            let mut s = String::new();
            let mut last: Option<(ActionType, f64)> = None;
            for r in &rows {
                if last != Some((r.ty, r.t)) {
                    let _ = writeln!(s, "type {}  t = {:.10}  s = {:.10}", r.ty, r.t, r.s);
                    let _ = writeln!(s, "  {:>20} {:>20} {:>5} {:>10}", "computed", "closed form", "mult", "deviation");
                    last = Some((r.ty, r.t));
                }
                let _ = writeln!(
                    s,
                    "  {:>+20.14} {:>+20.14} {:>5} {:>10.2e}",
                    r.computed,
                    r.closed,
                    r.multiplicity,
                    (r.computed - r.closed).abs()
                );
            }
            let _ = writeln!(s, "{}", if success { "PASS" } else { "FAIL" });
            s
        }
        Format::Csv => {
            let header = ["type", "t", "s", "computed", "closed_form", "multiplicity", "deviation"].map(String::from);
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        r.ty.to_string(),
                        num(r.t),
                        num(r.s),
                        num(r.computed),
                        num(r.closed),
                        r.multiplicity.to_string(),
                        num((r.computed - r.closed).abs()),
                    ]
                })
                .collect();
            csv_string(&header, &body)?
        }
        Format::Json => json_string(
            json!({
                "command": "tables",
                "passed": success,
                "cluster_tol": cli.cluster_tol,
                "compared_against": types(args).into_iter().map(|ty| json!({ "type": ty, "source": family(ty) })).collect::<Vec<_>>(),
            }),
            rows.iter()
                .map(|r| {
                    json!({
                        "type": r.ty, "t": r.t, "s": r.s,
                        "computed": r.computed, "closed_form": r.closed,
                        "multiplicity": r.multiplicity,
                        "source": family(r.ty),
                    })
                })
                .collect(),
        ),
    };
    Ok(Outcome { report, success })
}
