//! The `torsionk` command line: argument parsing, input loading and reports.
//!
//! Every command prints one JSON report `{torsionk_schema, command, result,
//! summary}` to stdout. Exit codes: 0 ok, 2 a failed verification or class
//! precondition, 64 parse or usage errors, 65 unsupported parameters.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use torsionk_core::cw::{class_of, cohomology, CohomologyClass, Cw2Complex};
use torsionk_core::invariants::{class_of_solution, homotopy_group, HomotopyGroupResult, SpectrumId};
use torsionk_core::lcs::{
    canonical_realization, classical_value, fixture, hypergraph_of, scalar_solution, FixtureName,
    LinearConstraintSystem,
};
use torsionk_core::linalg::FinAbGroup;
use torsionk_core::operators::{verify_solution, OperatorSolution};
use torsionk_core::Error;

use crate::format::{self, CwDoc, FormatError, LcsDoc, SolutionDoc, SCHEMA_VERSION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 2;
pub const EXIT_USAGE: i32 = 64;
pub const EXIT_UNSUPPORTED: i32 = 65;

/// Prefix that names a shipped fixture instead of a file.
pub const BUILTIN_PREFIX: &str = "builtin:";

#[derive(Debug, Parser)]
#[command(name = "torsionk", version, about = "Linear constraint systems over Z/d and their topological invariants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scalar solvability, classical value and [tau] on the canonical realization.
    Analyze { lcs: String },
    /// Check an operator solution against a system.
    Verify {
        lcs: String,
        #[arg(long)]
        solution: String,
    },
    /// Cellular cohomology of a 2-complex.
    Cohomology {
        cw: String,
        #[arg(long)]
        coeff: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        deg: u8,
    },
    /// The C(d,m) class of an operator solution on a realization.
    Class {
        lcs: String,
        #[arg(long)]
        solution: String,
        #[arg(long)]
        realization: String,
        #[arg(long)]
        m: u64,
    },
    /// Homotopy groups of kmu_d, C(d,m), ko_sym and C_R(2,m).
    Homotopy {
        #[arg(long, value_enum)]
        spectrum: SpectrumArg,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long)]
        r: u32,
    },
    /// Emit a shipped fixture as JSON documents.
    Builtin {
        name: String,
        #[arg(long, value_enum, default_value = "all")]
        emit: Emit,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpectrumArg {
    Kmud,
    Cdm,
    Kosym,
    Creal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Lcs,
    Solution,
    Realization,
    All,
}

/// What a command prints and how it exits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::usage(e.to_string())
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnverifiedSolution => EXIT_FAILED,
            Error::UnknownFixture(_) => EXIT_USAGE,
            _ => EXIT_UNSUPPORTED,
        };
        CliError { code, message: e.to_string() }
    }
}

#[derive(Serialize)]
struct Report {
    torsionk_schema: u32,
    command: Value,
    result: Value,
    summary: String,
}

/// A finished command: report body plus exit code.
struct Done {
    code: i32,
    result: Value,
    summary: String,
}

impl Done {
    fn ok(result: Value, summary: String) -> Self {
        Done { code: EXIT_OK, result, summary }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo = echo(&cli.command);
    match execute(&cli.command) {
        Ok(done) => {
            let report = Report {
                torsionk_schema: SCHEMA_VERSION,
                command: echo,
                result: done.result,
                summary: done.summary.clone(),
            };
            Outcome { code: done.code, stdout: format::to_canonical_json(&report), stderr: done.summary + "\n" }
        }
        Err(e) => Outcome { code: e.code, stdout: String::new(), stderr: format!("error: {}\n", e.message) },
    }
}

fn echo(c: &Command) -> Value {
    match c {
        Command::Analyze { lcs } => json!({"name": "analyze", "lcs": lcs}),
        Command::Verify { lcs, solution } => json!({"name": "verify", "lcs": lcs, "solution": solution}),
        Command::Cohomology { cw, coeff, deg } => json!({"name": "cohomology", "cw": cw, "coeff": coeff, "deg": deg}),
        Command::Class { lcs, solution, realization, m } => {
            json!({"name": "class", "lcs": lcs, "solution": solution, "realization": realization, "m": m})
        }
        Command::Homotopy { spectrum, d, m, r } => {
            json!({"name": "homotopy", "spectrum": spectrum_name(*spectrum), "d": d, "m": m, "r": r})
        }
        Command::Builtin { name, emit, out_dir } => json!({
            "name": "builtin",
            "fixture": name,
            "emit": emit_name(*emit),
            "out_dir": out_dir.as_ref().map(|p| p.display().to_string()),
        }),
    }
}

fn spectrum_name(s: SpectrumArg) -> &'static str {
    match s {
        SpectrumArg::Kmud => "kmud",
        SpectrumArg::Cdm => "cdm",
        SpectrumArg::Kosym => "kosym",
        SpectrumArg::Creal => "creal",
    }
}

fn emit_name(e: Emit) -> &'static str {
    match e {
        Emit::Lcs => "lcs",
        Emit::Solution => "solution",
        Emit::Realization => "realization",
        Emit::All => "all",
    }
}

fn execute(c: &Command) -> Result<Done, CliError> {
    match c {
        Command::Analyze { lcs } => analyze(&load_lcs(lcs)?),
        Command::Verify { lcs, solution } => verify(&load_lcs(lcs)?, &load_solution(solution)?),
        Command::Cohomology { cw, coeff, deg } => cohomology_cmd(&load_cw(cw)?, *coeff, *deg as usize),
        Command::Class { lcs, solution, realization, m } => {
            class_cmd(&load_lcs(lcs)?, &load_solution(solution)?, &load_cw(realization)?, *m)
        }
        Command::Homotopy { spectrum, d, m, r } => homotopy_cmd(*spectrum, *d, *m, *r),
        Command::Builtin { name, emit, out_dir } => builtin_cmd(name, *emit, out_dir.as_deref()),
    }
}

// ---- inputs ----

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("cannot read {path}: {e}")))
}

fn builtin(path: &str) -> Option<&str> {
    path.strip_prefix(BUILTIN_PREFIX)
}

pub fn load_lcs(path: &str) -> Result<LinearConstraintSystem, CliError> {
    if let Some(name) = builtin(path) {
        return Ok(fixture(name.parse()?).system);
    }
    Ok(format::parse::<LcsDoc>(&read(path)?)?.to_system()?)
}

pub fn load_solution(path: &str) -> Result<OperatorSolution, CliError> {
    if let Some(name) = builtin(path) {
        return Ok(fixture(name.parse()?).solution);
    }
    Ok(format::parse::<SolutionDoc>(&read(path)?)?.to_solution()?)
}

/// Besides the fixtures, `builtin:torus` and `builtin:sphere` name the
/// one-vertex torus and the sphere.
pub fn load_cw(path: &str) -> Result<Cw2Complex, CliError> {
    match builtin(path) {
        Some("torus") => Ok(Cw2Complex::standard_torus()),
        Some("sphere") => Ok(Cw2Complex::sphere()),
        Some(name) => Ok(fixture(name.parse()?).torus),
        None => Ok(format::parse::<CwDoc>(&read(path)?)?.to_complex()?),
    }
}

// ---- JSON helpers ----

fn big(n: &BigInt) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

fn group_json(g: &FinAbGroup) -> Value {
    json!({
        "invariant_factors": g.invariant_factors().iter().map(big).collect::<Vec<_>>(),
        "order": big(&g.order()),
        "display": g.to_string(),
    })
}

fn class_json(c: &CohomologyClass) -> Value {
    json!({
        "degree": c.degree,
        "modulus": c.modulus,
        "group": group_json(&c.group),
        "coordinates": c.coordinates.iter().map(big).collect::<Vec<_>>(),
        "is_zero": c.is_zero,
    })
}

// ---- commands ----

fn analyze(l: &LinearConstraintSystem) -> Result<Done, CliError> {
    let d = l.modulus();
    let scalar = scalar_solution(l);
    let (h, tau) = hypergraph_of(l);
    let x = canonical_realization(&h);
    let tau_class = class_of(&x, d, 2, &tau)?;
    assert_eq!(scalar.is_some(), tau_class.is_zero, "scalar solvability must match [tau] = 0");
    let (classical, classical_text) = match classical_value(l) {
        Ok(v) => {
            let text = format!("classical value {}", v.value());
            (
                json!({
                    "satisfied": v.satisfied,
                    "total": v.total,
                    "value": v.value().to_string(),
                    "maximizer": v.maximizer.coords(),
                }),
                text,
            )
        }
        Err(e @ Error::BoundExceeded { .. }) => (json!({"skipped": e.to_string()}), "classical value skipped".into()),
        Err(e) => return Err(e.into()),
    };
    let summary = format!(
        "{}; {}; [tau] {} in H^2 = {}",
        match &scalar {
            Some(x) => format!("scalar solution {:?}", x.coords()),
            None => "contextual: no scalar solution".into(),
        },
        classical_text,
        if tau_class.is_zero { "zero" } else { "nonzero" },
        tau_class.group
    );
    let result = json!({
        "d": d,
        "variables": l.variables(),
        "constraints": l.constraints().len(),
        "contextual": scalar.is_none(),
        "scalar_solution": scalar.as_ref().map(|x| x.coords().to_vec()),
        "classical_value": classical,
        "tau_class": {"realization": "canonical", "class": class_json(&tau_class)},
    });
    Ok(Done::ok(result, summary))
}

fn verify(l: &LinearConstraintSystem, t: &OperatorSolution) -> Result<Done, CliError> {
    let report = verify_solution(l, t)?;
    let passed = report.passed();
    let result = json!({
        "passed": passed,
        "exact": report.exact,
        "torsion": report.torsion.iter().map(|v| json!({"variable": v.variable, "passed": v.passed})).collect::<Vec<_>>(),
        "commutation": report
            .commutation
            .iter()
            .map(|v| json!({"pair": [v.pair.0, v.pair.1], "passed": v.passed}))
            .collect::<Vec<_>>(),
        "constraint": report
            .constraint
            .iter()
            .map(|v| json!({"row": v.row, "passed": v.passed, "product": v.product}))
            .collect::<Vec<_>>(),
        "failing_rows": report.failing_rows(),
    });
    let checks = report.torsion.len() + report.commutation.len() + report.constraint.len();
    let summary = if passed {
        format!("all {checks} checks pass")
    } else {
        let bad = |it: &mut dyn Iterator<Item = bool>| it.filter(|p| !p).count();
        format!(
            "verification failed: {} torsion, {} commutation, {} constraint failures; failing rows {:?}",
            bad(&mut report.torsion.iter().map(|v| v.passed)),
            bad(&mut report.commutation.iter().map(|v| v.passed)),
            bad(&mut report.constraint.iter().map(|v| v.passed)),
            report.failing_rows()
        )
    };
    Ok(Done { code: if passed { EXIT_OK } else { EXIT_FAILED }, result, summary })
}

fn cohomology_cmd(x: &Cw2Complex, k: u64, deg: usize) -> Result<Done, CliError> {
    if k < 2 {
        return Err(CliError::usage(format!("--coeff must be at least 2, got {k}")));
    }
    let g = cohomology(x, k, deg)?;
    let cells: Vec<&str> = match deg {
        1 => x.one_cells().iter().map(|c| c.name.as_str()).collect(),
        _ => x.two_cells().iter().map(|c| c.name.as_str()).collect(),
    };
    let generators: Vec<Vec<u64>> = g.generators().unwrap_or_default().iter().map(|v| v.coords().to_vec()).collect();
    let summary = format!("H^{deg}(X, Z/{k}) = {g}");
    Ok(Done::ok(
        json!({"coeff": k, "degree": deg, "group": group_json(&g), "cells": cells, "generators": generators}),
        summary,
    ))
}

fn class_cmd(l: &LinearConstraintSystem, t: &OperatorSolution, x: &Cw2Complex, m: u64) -> Result<Done, CliError> {
    let class = class_of_solution(x, l, t, m)?;
    let summary = format!(
        "class {class} in C({},{m})(X); h2 {}",
        class.d,
        if class.h2.is_zero { "zero: a scalar solution exists" } else { "nonzero: no scalar solution" }
    );
    Ok(Done::ok(
        json!({
            "d": class.d,
            "m": m,
            "g": class.g,
            "class": class.to_string(),
            "h1": class_json(&class.h1),
            "h2": class_json(&class.h2),
            "h2_zero": class.h2.is_zero,
        }),
        summary,
    ))
}

fn homotopy_cmd(s: SpectrumArg, d: Option<u64>, m: Option<u64>, r: u32) -> Result<Done, CliError> {
    let need = |v: Option<u64>, flag: &str| {
        v.ok_or_else(|| CliError::usage(format!("--{flag} is required for --spectrum {}", spectrum_name(s))))
    };
    let id = match s {
        SpectrumArg::Kmud => SpectrumId::KMuD(need(d, "d")?),
        SpectrumArg::Cdm => SpectrumId::Cdm(need(d, "d")?, need(m, "m")?),
        SpectrumArg::Kosym => SpectrumId::KoSym,
        SpectrumArg::Creal => SpectrumId::CReal(need(m, "m")?),
    };
    let (result, summary) = match homotopy_group(id, r)? {
        HomotopyGroupResult::Exact(g) => {
            (json!({"spectrum": id.to_string(), "r": r, "exact": true, "group": group_json(&g)}), format!("pi_{r} {id} = {g}"))
        }
        HomotopyGroupResult::UpToExtension { order, factors, candidates } => (
            json!({
                "spectrum": id.to_string(),
                "r": r,
                "exact": false,
                "order": big(&order),
                "factors": factors.iter().map(group_json).collect::<Vec<_>>(),
                "candidates": candidates.iter().map(group_json).collect::<Vec<_>>(),
            }),
            format!(
                "pi_{r} {id} has order {order}, extension unresolved between {}",
                candidates.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" and ")
            ),
        ),
    };
    Ok(Done::ok(result, summary))
}

fn builtin_cmd(name: &str, emit: Emit, out_dir: Option<&Path>) -> Result<Done, CliError> {
    let fx = fixture(name.parse::<FixtureName>()?);
    let mut docs = Vec::new();
    if matches!(emit, Emit::Lcs | Emit::All) {
        docs.push(("lcs", serde_json::to_value(LcsDoc::from_system(&fx.system)).expect("serializes")));
    }
    if matches!(emit, Emit::Solution | Emit::All) {
        docs.push(("solution", serde_json::to_value(SolutionDoc::from_solution(&fx.solution)).expect("serializes")));
    }
    if matches!(emit, Emit::Realization | Emit::All) {
        docs.push(("realization", serde_json::to_value(CwDoc::from_complex(&fx.torus)).expect("serializes")));
    }
    let mut result = serde_json::Map::new();
    result.insert("fixture".into(), json!(fx.name.as_str()));
    let summary = match out_dir {
        Some(dir) => {
            std::fs::create_dir_all(dir).map_err(|e| CliError::usage(format!("cannot create {}: {e}", dir.display())))?;
            let mut files = Vec::new();
            for (kind, doc) in &docs {
                let path = dir.join(format!("{}.{kind}.json", fx.name));
                std::fs::write(&path, format::to_canonical_json(doc))
                    .map_err(|e| CliError::usage(format!("cannot write {}: {e}", path.display())))?;
                files.push(path.display().to_string());
            }
            let summary = format!("wrote {}", files.join(", "));
            result.insert("files".into(), json!(files));
            summary
        }
        None => {
            for (kind, doc) in docs.iter() {
                result.insert((*kind).into(), doc.clone());
            }
            format!(
                "{}: {} variables, {} constraints over Z/{}",
                fx.name,
                fx.system.variables().len(),
                fx.system.constraints().len(),
                fx.system.modulus()
            )
        }
    };
    Ok(Done::ok(Value::Object(result), summary))
}
