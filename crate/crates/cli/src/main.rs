//! Command-line front end for the exact ternary-Lie-algebra kernel:
//! catalog listing, Fundamental Identity checks, Yang–Baxter residuals
//! and solution conditions, induced coproducts with the local-cocycle
//! bialgebra check, classified coproduct families, double-construction
//! constraints, and Manin-triple verification.
//!
//! Output is deterministic (sorted JSON keys, canonical polynomial
//! text).  Exit status: 0 = success / all checks passed, 1 = a
//! verification reported defects, 2 = malformed input.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use threelie::catalog::{self, ALL_IDS};
use threelie::cocycle::{check_local_cocycle_bialgebra, dual_algebra};
use threelie::cybe::{
    cybe_conditions, cybe_residual_naive, cybe_residual_skew, induced_coproduct_components,
    Coproduct,
};
use threelie::double::{
    build_double, check_manin_triple, constraint_eq26, constraint_eq27, delta_family,
    solve_delta_families, DeltaFamily, DoubleAlgebra,
};
use threelie::json as wire;
use threelie::{Algebra, CatalogId, Error, RMatrix, Rational, Result, Scalar, Tensor};

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Parser)]
#[command(
    name = "threelie",
    version,
    about = "Exact verification and construction toolkit for ternary Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
}

#[derive(Subcommand)]
enum Verb {
    /// List the built-in catalog of ternary algebras.
    Catalog,
    /// Check the Fundamental Identity of an algebra.
    CheckFi {
        /// Catalog id (`dim3`, `dim4-1` … `dim4-7`) or inline algebra JSON.
        algebra: String,
    },
    /// Compute the Yang–Baxter residual of an r-matrix.
    CybeResidual {
        /// Catalog id or inline algebra JSON.
        algebra: String,
        /// r-matrix entries as JSON, e.g. '{"a_1_2":"3/2"}'; omit for a
        /// fully symbolic skew r.
        #[arg(long)]
        r: Option<String>,
        /// Treat --r as upper-triangular skew input (`a_i_j`, i<j) and
        /// fill the lower triangle with the negatives.
        #[arg(long)]
        skew: bool,
    },
    /// Polynomial conditions on a skew r-matrix to have zero residual.
    CybeConditions {
        /// Catalog id or inline algebra JSON.
        algebra: String,
    },
    /// Induce the three slot coproducts and their sum from an r-matrix.
    InduceDelta {
        /// Catalog id or inline algebra JSON.
        algebra: String,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        skew: bool,
    },
    /// Check the local-cocycle bialgebra conditions of induced coproducts.
    CheckLocalCocycle {
        /// Catalog id or inline algebra JSON.
        algebra: String,
        #[arg(long)]
        r: Option<String>,
        #[arg(long)]
        skew: bool,
        /// Slot coproducts as emitted by `induce-delta` (overrides --r).
        #[arg(long)]
        delta: Option<String>,
    },
    /// The classified coproduct family of a catalog entry with its
    /// exact null-space completeness certificate.
    DeltaFamilies {
        /// Catalog id.
        id: String,
    },
    /// Check both double-construction constraints and the dual
    /// Fundamental Identity for a coproduct.
    CheckDouble {
        /// Catalog id or inline algebra JSON.
        algebra: String,
        /// Coproduct JSON (a `{"dim", "components"}` document or any
        /// document carrying one under `coproduct`); defaults to the
        /// catalog entry's family.
        #[arg(long)]
        delta: Option<String>,
        /// Rational values for family parameters, e.g. '{"k":"1"}'.
        #[arg(long)]
        params: Option<String>,
    },
    /// Build the double algebra on the direct sum with the dual.
    BuildDouble {
        /// Catalog id or inline algebra JSON.
        algebra: String,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long)]
        params: Option<String>,
    },
    /// Run the six Manin-triple checks on a double algebra.
    CheckManin {
        /// A double-algebra JSON document (as emitted by
        /// `build-double`) or a catalog id, whose family double is
        /// built first.
        input: String,
        #[arg(long)]
        params: Option<String>,
    },
}

struct Output {
    value: Value,
    text: String,
    passed: bool,
}

impl Output {
    fn pass(value: Value, text: String) -> Self {
        Output {
            value,
            text,
            passed: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.verb) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", out.value),
                Format::Text => println!("{}", out.text.trim_end()),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn parse_error(message: impl Into<String>) -> Error {
    Error::Parse(message.into())
}

struct AlgebraInput {
    label: String,
    id: Option<CatalogId>,
    algebra: Algebra,
}

fn resolve_algebra(text: &str) -> Result<AlgebraInput> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(trimmed)
            .map_err(|e| parse_error(format!("invalid algebra JSON: {e}")))?;
        Ok(AlgebraInput {
            label: "custom".to_string(),
            id: None,
            algebra: wire::algebra_from_json(&value)?,
        })
    } else {
        let id: CatalogId = trimmed.parse()?;
        Ok(AlgebraInput {
            label: id.as_str().to_string(),
            id: Some(id),
            algebra: catalog::algebra(id),
        })
    }
}

fn parse_json(text: &str, what: &str) -> Result<Value> {
    serde_json::from_str(text.trim()).map_err(|e| parse_error(format!("invalid {what} JSON: {e}")))
}

fn resolve_r(dim: usize, r: Option<&str>, skew: bool) -> Result<RMatrix<Scalar>> {
    match r {
        None => Ok(RMatrix::symbolic_skew(dim)),
        Some(text) => wire::r_matrix_from_json(dim, &parse_json(text, "r-matrix")?, skew),
    }
}

fn parse_params(text: Option<&str>) -> Result<BTreeMap<String, Rational>> {
    let Some(text) = text else {
        return Ok(BTreeMap::new());
    };
    let value = parse_json(text, "parameter")?;
    let obj = value
        .as_object()
        .ok_or_else(|| parse_error("--params must be a JSON object of rational values"))?;
    let mut out = BTreeMap::new();
    for (name, v) in obj {
        let scalar = wire::scalar_from_json(v)?;
        let rational = scalar
            .as_rational()
            .ok_or_else(|| parse_error(format!("parameter `{name}` must be rational")))?;
        out.insert(name.clone(), rational);
    }
    Ok(out)
}

/// The family of a catalog entry, instantiated at `--params` values.
fn resolve_family_delta(
    input: &AlgebraInput,
    params: Option<&str>,
) -> Result<(DeltaFamily, Coproduct<Scalar>)> {
    let id = input.id.ok_or_else(|| {
        parse_error("a catalog id is required unless --delta supplies a coproduct")
    })?;
    let family = delta_family(id);
    let bindings = parse_params(params)?;
    let known: BTreeSet<String> = family.parameter_names().into_iter().collect();
    for name in bindings.keys() {
        if !known.contains(name) {
            return Err(parse_error(format!(
                "`{}` has no family parameter `{name}` (available: {})",
                id.as_str(),
                known.iter().cloned().collect::<Vec<_>>().join(", ")
            )));
        }
    }
    let delta = family.instantiate(&bindings);
    Ok((family, delta))
}

fn resolve_delta(
    input: &AlgebraInput,
    delta: Option<&str>,
    params: Option<&str>,
) -> Result<Coproduct<Scalar>> {
    match delta {
        Some(text) => {
            let value = parse_json(text, "coproduct")?;
            let doc = if value.get("components").is_some() {
                value.clone()
            } else if let Some(inner) = value.get("coproduct") {
                inner.clone()
            } else {
                return Err(parse_error(
                    "--delta needs a coproduct document with `components`",
                ));
            };
            let delta = wire::coproduct_from_json(&doc)?;
            if delta.dim() != input.algebra.dim() {
                return Err(Error::DimensionMismatch {
                    expected: input.algebra.dim(),
                    got: delta.dim(),
                });
            }
            Ok(delta)
        }
        None => Ok(resolve_family_delta(input, params)?.1),
    }
}

fn coproduct_parameters(delta: &Coproduct<Scalar>) -> Vec<String> {
    let mut names: BTreeSet<String> = BTreeSet::new();
    for (_, component) in delta.components() {
        for (_, coeff) in component.terms() {
            names.extend(coeff.parameters());
        }
    }
    names.into_iter().collect()
}

// ---------------------------------------------------------------------
// Text rendering

fn tuple_text(idx: &[usize]) -> String {
    let parts: Vec<String> = idx.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn basis_label(split: Option<usize>, idx: usize) -> String {
    match split {
        Some(n) if idx > n => format!("f{}", idx - n),
        _ => format!("e{idx}"),
    }
}

/// Linear combination over basis labels; `split` marks a half/half
/// basis written as `e1..en, f1..fn`.
fn vector_text(v: &[Scalar], split: Option<usize>) -> String {
    let mut terms: Vec<String> = Vec::new();
    for (pos, coeff) in v.iter().enumerate() {
        let text = coeff.to_string();
        if text == "0" {
            continue;
        }
        let label = basis_label(split, pos + 1);
        if text == "1" {
            terms.push(label);
        } else if text == "-1" {
            terms.push(format!("-{label}"));
        } else if coeff.num_terms() == 1 {
            terms.push(format!("{text}*{label}"));
        } else {
            terms.push(format!("({text})*{label}"));
        }
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ").replace("+ -", "- ")
    }
}

fn tensor_lines(t: &Tensor<Scalar>, indent: &str, out: &mut String) {
    if t.is_zero() {
        out.push_str(&format!("{indent}0\n"));
        return;
    }
    for (idx, coeff) in t.terms() {
        out.push_str(&format!("{indent}{}: {coeff}\n", tuple_text(idx)));
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "passed"
    } else {
        "failed"
    }
}

const DEFECT_CAP: usize = 10;

fn capped<T>(items: &[T], mut line: impl FnMut(&T) -> String, out: &mut String) {
    for item in items.iter().take(DEFECT_CAP) {
        out.push_str(&line(item));
    }
    if items.len() > DEFECT_CAP {
        out.push_str(&format!("  ... and {} more\n", items.len() - DEFECT_CAP));
    }
}

fn fi_text(
    report: &threelie::FiReport<Scalar>,
    name: &str,
    split: Option<usize>,
    out: &mut String,
) {
    out.push_str(&format!(
        "{name}: {} ({} defects)\n",
        verdict(report.passed()),
        report.defects.len()
    ));
    capped(
        &report.defects,
        |d| format!("  {}: {}\n", tuple_text(&d.tuple), vector_text(&d.defect, split)),
        out,
    );
}

// ---------------------------------------------------------------------
// Verb handlers

fn run(verb: &Verb) -> Result<Output> {
    match verb {
        Verb::Catalog => catalog_verb(),
        Verb::CheckFi { algebra } => check_fi(algebra),
        Verb::CybeResidual { algebra, r, skew } => cybe_residual(algebra, r.as_deref(), *skew),
        Verb::CybeConditions { algebra } => conditions(algebra),
        Verb::InduceDelta { algebra, r, skew } => induce_delta(algebra, r.as_deref(), *skew),
        Verb::CheckLocalCocycle {
            algebra,
            r,
            skew,
            delta,
        } => check_local_cocycle(algebra, r.as_deref(), *skew, delta.as_deref()),
        Verb::DeltaFamilies { id } => delta_families(id),
        Verb::CheckDouble {
            algebra,
            delta,
            params,
        } => check_double(algebra, delta.as_deref(), params.as_deref()),
        Verb::BuildDouble {
            algebra,
            delta,
            params,
        } => build_double_verb(algebra, delta.as_deref(), params.as_deref()),
        Verb::CheckManin { input, params } => check_manin(input, params.as_deref()),
    }
}

fn catalog_verb() -> Result<Output> {
    let mut entries = Vec::new();
    let mut text = String::new();
    for id in ALL_IDS {
        let algebra = catalog::algebra(id);
        entries.push(json!({
            "id": id.as_str(),
            "dim": id.dim(),
            "description": id.description(),
            "algebra": wire::algebra_to_json(&algebra),
        }));
        text.push_str(&format!(
            "{:<8} dim {}  {}\n",
            id.as_str(),
            id.dim(),
            id.description()
        ));
    }
    Ok(Output::pass(json!({ "entries": entries }), text))
}

fn check_fi(algebra: &str) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    let report = input.algebra.check_fundamental_identity();
    let mut text = String::new();
    fi_text(&report, "fundamental identity", None, &mut text);
    Ok(Output {
        value: wire::fi_report_to_json(&report),
        text,
        passed: report.passed(),
    })
}

fn cybe_residual(algebra: &str, r: Option<&str>, skew: bool) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    let rm = resolve_r(input.algebra.dim(), r, skew)?;
    let skew_path = r.is_none() || skew;
    let residual = if skew_path {
        cybe_residual_skew(&input.algebra, &rm)?
    } else {
        cybe_residual_naive(&input.algebra, &rm)?
    };
    let mut text = String::from("residual:\n");
    tensor_lines(&residual, "  ", &mut text);
    Ok(Output::pass(wire::tensor_to_json(&residual), text))
}

fn conditions(algebra: &str) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    let generators = cybe_conditions(&input.algebra);
    let mut text = String::from("generators:\n");
    if generators.is_empty() {
        text.push_str("  (none: every skew r-matrix has zero residual)\n");
    }
    for g in &generators {
        text.push_str(&format!("  {g}\n"));
    }
    Ok(Output::pass(wire::conditions_to_json(&generators), text))
}

fn induce_delta(algebra: &str, r: Option<&str>, skew: bool) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    let rm = resolve_r(input.algebra.dim(), r, skew)?;
    let (d1, d2, d3) = induced_coproduct_components(&input.algebra, &rm)?;
    let total = d1.add(&d2).add(&d3);
    let value = json!({
        "coproduct": wire::coproduct_to_json(&total),
        "slots": [
            wire::coproduct_to_json(&d1),
            wire::coproduct_to_json(&d2),
            wire::coproduct_to_json(&d3),
        ],
    });
    let mut text = String::from("coproduct:\n");
    for (i, component) in total.components() {
        text.push_str(&format!("  Delta(e{i}):\n"));
        tensor_lines(component, "    ", &mut text);
    }
    Ok(Output::pass(value, text))
}

fn check_local_cocycle(
    algebra: &str,
    r: Option<&str>,
    skew: bool,
    delta: Option<&str>,
) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    let (d1, d2, d3) = match delta {
        Some(text) => {
            let value = parse_json(text, "coproduct")?;
            let slots = value
                .get("slots")
                .and_then(Value::as_array)
                .filter(|s| s.len() == 3)
                .ok_or_else(|| {
                    parse_error("--delta needs the three slot coproducts under `slots`")
                })?;
            (
                wire::coproduct_from_json(&slots[0])?,
                wire::coproduct_from_json(&slots[1])?,
                wire::coproduct_from_json(&slots[2])?,
            )
        }
        None => {
            let rm = resolve_r(input.algebra.dim(), r, skew)?;
            induced_coproduct_components(&input.algebra, &rm)?
        }
    };
    let report = check_local_cocycle_bialgebra(&input.algebra, &d1, &d2, &d3)?;
    let mut text = String::new();
    for (slot, sub) in report.cocycle_reports.iter().enumerate() {
        text.push_str(&format!(
            "slot {} cocycle: {} ({} defects)\n",
            slot + 1,
            verdict(sub.passed()),
            sub.defects.len()
        ));
    }
    if report.non_alternating_components.is_empty() {
        text.push_str("components alternating: yes\n");
    } else {
        text.push_str(&format!(
            "components alternating: no {:?}\n",
            report.non_alternating_components
        ));
    }
    match &report.dual_fi {
        Some(fi) => fi_text(fi, "dual fundamental identity", None, &mut text),
        None => text.push_str("dual fundamental identity: skipped\n"),
    }
    text.push_str(&format!("overall: {}\n", verdict(report.passed())));
    Ok(Output {
        value: wire::local_cocycle_report_to_json(&report),
        text,
        passed: report.passed(),
    })
}

fn delta_families(id: &str) -> Result<Output> {
    let id: CatalogId = id.trim().parse()?;
    let solution = solve_delta_families(id);
    let family = &solution.family;
    let mut text = format!("id: {}\n", family.catalog_id.as_str());
    text.push_str(&format!(
        "parameters: {}\n",
        if family.parameters.is_empty() {
            "(none)".to_string()
        } else {
            family.parameter_names().join(", ")
        }
    ));
    text.push_str("family:\n");
    for (i, component) in family.coproduct.components() {
        text.push_str(&format!("  Delta(e{i}):\n"));
        tensor_lines(component, "    ", &mut text);
    }
    text.push_str(&format!("null space dimension: {}\n", solution.null_space_dim));
    text.push_str(&format!("family dimension: {}\n", solution.family_dimension));
    text.push_str(&format!(
        "family inside solution space: {}\n",
        solution.family_in_null_space
    ));
    text.push_str(&format!(
        "generators independent: {}\n",
        solution.generators_independent
    ));
    text.push_str(&format!(
        "family spans solution space: {}\n",
        solution.family_spans_null_space()
    ));
    Ok(Output {
        value: wire::delta_family_solution_to_json(&solution),
        text,
        passed: solution.family_spans_null_space(),
    })
}

fn check_double(algebra: &str, delta: Option<&str>, params: Option<&str>) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    let delta = resolve_delta(&input, delta, params)?;
    let first = constraint_eq26(&input.algebra, &delta)?;
    let second = constraint_eq27(&input.algebra, &delta)?;
    let dual = dual_algebra(&delta)?;
    let dual_fi = dual.check_fundamental_identity();
    let passed = first.passed() && second.passed() && dual_fi.passed();
    let value = json!({
        "passed": passed,
        "first_constraint": wire::constraint_report_to_json(&first),
        "second_constraint": wire::constraint_report_to_json(&second),
        "dual_fundamental_identity": wire::fi_report_to_json(&dual_fi),
    });
    let mut text = String::new();
    for (name, report) in [("first constraint", &first), ("second constraint", &second)] {
        text.push_str(&format!(
            "{name}: {} ({} defects)\n",
            verdict(report.passed()),
            report.defects.len()
        ));
        capped(
            &report.defects,
            |d| format!("  {}: {}\n", tuple_text(&d.tuple), d.defect),
            &mut text,
        );
    }
    fi_text(&dual_fi, "dual fundamental identity", None, &mut text);
    text.push_str(&format!("overall: {}\n", verdict(passed)));
    Ok(Output {
        value,
        text,
        passed,
    })
}

fn assemble_double(
    input: &AlgebraInput,
    delta: Option<&str>,
    params: Option<&str>,
) -> Result<std::result::Result<(DoubleAlgebra<Scalar>, Vec<String>), [usize; 5]>> {
    let delta = resolve_delta(input, delta, params)?;
    let parameters = coproduct_parameters(&delta);
    let dual = dual_algebra(&delta)?;
    match build_double(&input.algebra, &dual) {
        Ok(double) => Ok(Ok((double, parameters))),
        Err(Error::DualNotThreeLie { tuple }) => Ok(Err(tuple)),
        Err(e) => Err(e),
    }
}

fn dual_failure_output(tuple: [usize; 5]) -> Output {
    let value = json!({
        "passed": false,
        "reason": "the dual bracket violates the Fundamental Identity",
        "tuple": tuple,
    });
    let text = format!(
        "dual bracket violates the Fundamental Identity at {}\n",
        tuple_text(&tuple)
    );
    Output {
        value,
        text,
        passed: false,
    }
}

fn double_text(double: &DoubleAlgebra<Scalar>, label: &str, parameters: &[String]) -> String {
    let n = double.base_dim();
    let mut text = format!("base: {label} (dim {n})\n");
    text.push_str(&format!(
        "parameters: {}\n",
        if parameters.is_empty() {
            "(none)".to_string()
        } else {
            parameters.join(", ")
        }
    ));
    text.push_str("form: hyperbolic pairing <e_i, f_i> = 1\n");
    text.push_str("brackets:\n");
    for (&[i, j, k], value) in double.algebra().canonical_brackets() {
        text.push_str(&format!(
            "  [{},{},{}] = {}\n",
            basis_label(Some(n), i),
            basis_label(Some(n), j),
            basis_label(Some(n), k),
            vector_text(value, Some(n))
        ));
    }
    text
}

fn build_double_verb(algebra: &str, delta: Option<&str>, params: Option<&str>) -> Result<Output> {
    let input = resolve_algebra(algebra)?;
    match assemble_double(&input, delta, params)? {
        Err(tuple) => Ok(dual_failure_output(tuple)),
        Ok((double, parameters)) => {
            let value = wire::double_to_json(&double, &input.label, &parameters);
            let text = double_text(&double, &input.label, &parameters);
            Ok(Output::pass(value, text))
        }
    }
}

fn check_manin(input: &str, params: Option<&str>) -> Result<Output> {
    let trimmed = input.trim();
    let double = if trimmed.starts_with('{') {
        if params.is_some() {
            return Err(parse_error(
                "--params applies only to catalog ids, not double documents",
            ));
        }
        let value = parse_json(trimmed, "double algebra")?;
        let (_, _, double) = wire::double_from_json(&value)?;
        double
    } else {
        let algebra = resolve_algebra(trimmed)?;
        match assemble_double(&algebra, None, params)? {
            Err(tuple) => return Ok(dual_failure_output(tuple)),
            Ok((double, _)) => double,
        }
    };
    let report = check_manin_triple(&double);
    let mut text = String::new();
    fi_text(
        &report.fundamental_identity,
        "fundamental identity",
        Some(double.base_dim()),
        &mut text,
    );
    text.push_str(&format!(
        "form symmetric: {}\nform nondegenerate: {}\n",
        report.form_symmetric, report.form_nondegenerate
    ));
    for (name, count) in [
        ("invariance defects", report.invariance_defects.len()),
        ("isotropy defects", report.isotropy_defects.len()),
        ("closure defects", report.closure_defects.len()),
        ("projection defects", report.projection_defects.len()),
    ] {
        text.push_str(&format!("{name}: {count}\n"));
    }
    text.push_str(&format!("overall: {}\n", verdict(report.passed())));
    Ok(Output {
        value: wire::manin_report_to_json(&report),
        text,
        passed: report.passed(),
    })
}
