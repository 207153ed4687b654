//! Canonical JSON encoding for every value the command-line tool emits,
//! plus the matching readers.  All writers iterate ordered maps and
//! `serde_json`'s default object is key-sorted, so serialization is
//! deterministic; every document a writer produces is accepted back by
//! the corresponding reader.

use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Map, Value};

use crate::algebra::{FiReport, ThreeLieAlgebra};
use crate::cocycle::{CocycleReport, LocalCocycleReport};
use crate::cybe::Coproduct;
use crate::double::{
    BilinearForm, ConstraintReport, DeltaFamily, DeltaFamilySolution, DoubleAlgebra, ManinReport,
};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{Monomial, Rational, Scalar};
use crate::tensor::{r_entry_name, RMatrix, Tensor};

fn parse_error(message: impl Into<String>) -> Error {
    Error::Parse(message.into())
}

fn as_object(v: &Value) -> Result<&Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| parse_error(format!("expected a JSON object, got `{v}`")))
}

fn field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Value> {
    obj.get(name)
        .ok_or_else(|| parse_error(format!("missing field `{name}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| parse_error(format!("expected a nonnegative integer for {what}, got `{v}`")))
}

fn usize_field(obj: &Map<String, Value>, name: &str) -> Result<usize> {
    as_usize(field(obj, name)?, name)
}

fn array_field<'a>(obj: &'a Map<String, Value>, name: &str) -> Result<&'a Vec<Value>> {
    field(obj, name)?
        .as_array()
        .ok_or_else(|| parse_error(format!("field `{name}` must be a JSON array")))
}

fn index_vec(v: &Value, what: &str) -> Result<Vec<usize>> {
    v.as_array()
        .ok_or_else(|| parse_error(format!("{what} must be an array of indices")))?
        .iter()
        .map(|entry| as_usize(entry, what))
        .collect()
}

/// Parses `num` or `num/den` (arbitrary precision, optional sign).
pub fn parse_rational(text: &str) -> Result<Rational> {
    Rational::from_str(text.trim())
        .map_err(|e| parse_error(format!("invalid rational `{text}`: {e}")))
}

/// The canonical term-list encoding of a polynomial:
/// `[{"coeff": "num/den", "monomial": [[name, exp], ...]}, ...]` in
/// ascending monomial order.
pub fn scalar_to_json(s: &Scalar) -> Value {
    Value::Array(
        s.terms()
            .map(|(mono, coeff)| {
                let factors: Vec<Value> = mono
                    .factors()
                    .iter()
                    .map(|(name, exp)| json!([name, exp]))
                    .collect();
                json!({ "coeff": coeff.to_string(), "monomial": factors })
            })
            .collect(),
    )
}

/// Accepts the term-list encoding, a canonical text string, or a bare
/// integer.
pub fn scalar_from_json(v: &Value) -> Result<Scalar> {
    match v {
        Value::Array(terms) => {
            let mut out = Scalar::zero();
            for term in terms {
                let term = as_object(term)?;
                let coeff_text = field(term, "coeff")?
                    .as_str()
                    .ok_or_else(|| parse_error("term `coeff` must be a string"))?;
                let coeff = parse_rational(coeff_text)?;
                let mut pairs: Vec<(String, u32)> = Vec::new();
                for factor in array_field(term, "monomial")? {
                    let pair = factor
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| parse_error("monomial factors are [name, exponent] pairs"))?;
                    let name = pair[0]
                        .as_str()
                        .ok_or_else(|| parse_error("parameter name must be a string"))?;
                    let exp = as_usize(&pair[1], "exponent")? as u32;
                    pairs.push((name.to_string(), exp));
                }
                out.add_term(Monomial::from_pairs(pairs), coeff);
            }
            Ok(out)
        }
        Value::String(text) => parse_scalar_text(text),
        Value::Number(n) => n
            .as_i64()
            .map(Scalar::int)
            .ok_or_else(|| parse_error(format!("non-integer number `{n}` is not exact"))),
        other => Err(parse_error(format!(
            "cannot read a scalar from `{other}`; use a term list, a text form, or an integer"
        ))),
    }
}

fn parse_factor(piece: &str) -> Result<(String, u32)> {
    let (name, exp) = match piece.split_once('^') {
        Some((name, exp_text)) => {
            let exp: u32 = exp_text
                .parse()
                .map_err(|_| parse_error(format!("invalid exponent in `{piece}`")))?;
            (name, exp)
        }
        None => (piece, 1),
    };
    let valid = !name.is_empty()
        && name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if !valid {
        return Err(parse_error(format!("invalid parameter name `{name}`")));
    }
    Ok((name.to_string(), exp))
}

/// Parses the canonical text form (`2*a_1_2*a_3_4 - 1*a_1_3*a_2_4`,
/// exponents as `k^2`); a term may omit the leading coefficient.
pub fn parse_scalar_text(text: &str) -> Result<Scalar> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(parse_error("empty scalar text"));
    }
    if trimmed == "0" {
        return Ok(Scalar::zero());
    }
    let normalized = trimmed.replace(" - ", " + -");
    let mut out = Scalar::zero();
    for term in normalized.split(" + ") {
        let term = term.trim();
        if term.is_empty() {
            return Err(parse_error(format!("malformed scalar text `{text}`")));
        }
        let (negative, term) = match term.strip_prefix('-') {
            Some(rest) => (true, rest.trim()),
            None => (false, term),
        };
        let mut pieces = term.split('*').map(str::trim);
        let head = pieces
            .next()
            .ok_or_else(|| parse_error(format!("malformed term in `{text}`")))?;
        let mut pairs: Vec<(String, u32)> = Vec::new();
        let mut coeff = match Rational::from_str(head) {
            Ok(c) => c,
            Err(_) => {
                pairs.push(parse_factor(head)?);
                Rational::from_integer(1.into())
            }
        };
        for piece in pieces {
            pairs.push(parse_factor(piece)?);
        }
        if negative {
            coeff = -coeff;
        }
        out.add_term(Monomial::from_pairs(pairs), coeff);
    }
    Ok(out)
}

fn scalar_vec_to_json(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(scalar_to_json).collect())
}

fn scalar_vec_from_json(v: &Value, expected_len: usize, what: &str) -> Result<Vec<Scalar>> {
    let entries = v
        .as_array()
        .ok_or_else(|| parse_error(format!("{what} must be an array of scalars")))?;
    if entries.len() != expected_len {
        return Err(parse_error(format!(
            "{what} must have {expected_len} entries, got {}",
            entries.len()
        )));
    }
    entries.iter().map(scalar_from_json).collect()
}

/// `{"arity": k, "dim": n, "terms": [{"idx": [...], "coeff": ...}]}`
/// with terms sorted lexicographically by index tuple.
pub fn tensor_to_json(t: &Tensor<Scalar>) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .map(|(idx, coeff)| json!({ "idx": idx, "coeff": scalar_to_json(coeff) }))
        .collect();
    json!({ "arity": t.arity(), "dim": t.dim(), "terms": terms })
}

pub fn tensor_from_json(v: &Value) -> Result<Tensor<Scalar>> {
    let obj = as_object(v)?;
    let arity = usize_field(obj, "arity")?;
    let dim = usize_field(obj, "dim")?;
    let mut out = Tensor::zero(arity, dim);
    for term in array_field(obj, "terms")? {
        let term = as_object(term)?;
        let idx = index_vec(field(term, "idx")?, "term index")?;
        let coeff = scalar_from_json(field(term, "coeff")?)?;
        out.add_term(&idx, coeff)?;
    }
    Ok(out)
}

/// `{"dim": n, "brackets": [{"ijk": [i,j,k], "value": [scalar; n]}]}`
/// listing only canonical `i<j<k` triples in ascending order.
pub fn algebra_to_json(a: &ThreeLieAlgebra<Scalar>) -> Value {
    let brackets: Vec<Value> = a
        .canonical_brackets()
        .map(|(ijk, value)| json!({ "ijk": ijk, "value": scalar_vec_to_json(value) }))
        .collect();
    json!({ "dim": a.dim(), "brackets": brackets })
}

pub fn algebra_from_json(v: &Value) -> Result<ThreeLieAlgebra<Scalar>> {
    let obj = as_object(v)?;
    let dim = usize_field(obj, "dim")?;
    let mut out = ThreeLieAlgebra::new(dim);
    for entry in array_field(obj, "brackets")? {
        let entry = as_object(entry)?;
        let ijk = index_vec(field(entry, "ijk")?, "bracket triple")?;
        if ijk.len() != 3 {
            return Err(parse_error("bracket triple must have three indices"));
        }
        let value = scalar_vec_from_json(field(entry, "value")?, dim, "bracket value")?;
        out.set_bracket(ijk[0], ijk[1], ijk[2], value)?;
    }
    Ok(out)
}

/// Reads an r-matrix from an object keyed by entry names
/// (`{"a_1_2": "3/2", ...}`).  Under `skew`, only upper-triangular
/// entries `a_i_j` with `i < j` are accepted and the lower triangle is
/// filled with their negatives; otherwise any entry may be given.
pub fn r_matrix_from_json(dim: usize, v: &Value, skew: bool) -> Result<RMatrix<Scalar>> {
    let obj = as_object(v)?;
    let mut entries: Vec<(usize, usize, Scalar)> = Vec::new();
    for (key, value) in obj {
        let (i, j) = parse_entry_key(key)?;
        entries.push((i, j, scalar_from_json(value)?));
    }
    if skew {
        for &(i, j, _) in &entries {
            if i >= j {
                return Err(parse_error(format!(
                    "skew input accepts only upper-triangular entries; got `{}`",
                    r_entry_name(i, j)
                )));
            }
        }
        RMatrix::skew_from_upper(dim, &entries)
    } else {
        let mut out = RMatrix::zero(dim);
        for (i, j, value) in entries {
            out.set_entry(i, j, value)?;
        }
        Ok(out)
    }
}

fn parse_entry_key(key: &str) -> Result<(usize, usize)> {
    let bad = || parse_error(format!("r-matrix keys look like `a_1_2`; got `{key}`"));
    let rest = key.strip_prefix("a_").ok_or_else(bad)?;
    let (i, j) = rest.split_once('_').ok_or_else(bad)?;
    Ok((i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?))
}

/// `{"dim": n, "components": [tensor; n]}` — the `i`-th entry is the
/// image of the `i`-th basis vector.
pub fn coproduct_to_json(d: &Coproduct<Scalar>) -> Value {
    let components: Vec<Value> = d.components().map(|(_, t)| tensor_to_json(t)).collect();
    json!({ "dim": d.dim(), "components": components })
}

pub fn coproduct_from_json(v: &Value) -> Result<Coproduct<Scalar>> {
    let obj = as_object(v)?;
    let dim = usize_field(obj, "dim")?;
    let components = array_field(obj, "components")?;
    if components.len() != dim {
        return Err(parse_error(format!(
            "coproduct needs {dim} components, got {}",
            components.len()
        )));
    }
    let mut out = Coproduct::zero(dim);
    for (i, component) in components.iter().enumerate() {
        out.set_component(i + 1, tensor_from_json(component)?)?;
    }
    Ok(out)
}

pub fn fi_report_to_json(report: &FiReport<Scalar>) -> Value {
    let defects: Vec<Value> = report
        .defects
        .iter()
        .map(|d| json!({ "tuple": d.tuple, "defect": scalar_vec_to_json(&d.defect) }))
        .collect();
    json!({ "passed": report.passed(), "defects": defects })
}

pub fn cocycle_report_to_json(report: &CocycleReport<Scalar>) -> Value {
    let defects: Vec<Value> = report
        .defects
        .iter()
        .map(|d| json!({ "tuple": d.tuple, "defect": tensor_to_json(&d.defect) }))
        .collect();
    json!({ "passed": report.passed(), "defects": defects })
}

pub fn local_cocycle_report_to_json(report: &LocalCocycleReport<Scalar>) -> Value {
    let slots: Vec<Value> = report
        .cocycle_reports
        .iter()
        .map(cocycle_report_to_json)
        .collect();
    let dual = report
        .dual_fi
        .as_ref()
        .map(fi_report_to_json)
        .unwrap_or(Value::Null);
    json!({
        "passed": report.passed(),
        "cocycle": slots,
        "non_alternating_components": report.non_alternating_components,
        "dual_fundamental_identity": dual,
    })
}

pub fn constraint_report_to_json(report: &ConstraintReport<Scalar>) -> Value {
    let defects: Vec<Value> = report
        .defects
        .iter()
        .map(|d| json!({ "tuple": d.tuple, "defect": scalar_to_json(&d.defect) }))
        .collect();
    json!({ "passed": report.passed(), "defects": defects })
}

pub fn manin_report_to_json(report: &ManinReport<Scalar>) -> Value {
    let invariance: Vec<Value> = report
        .invariance_defects
        .iter()
        .map(|d| json!({ "tuple": d.tuple, "defect": scalar_to_json(&d.defect) }))
        .collect();
    let isotropy: Vec<Value> = report
        .isotropy_defects
        .iter()
        .map(|d| json!({ "pair": d.pair, "value": scalar_to_json(&d.value) }))
        .collect();
    let leaks = |defects: &[crate::double::LeakDefect<Scalar>]| -> Vec<Value> {
        defects
            .iter()
            .map(|d| json!({ "triple": d.triple, "leak": scalar_vec_to_json(&d.leak) }))
            .collect()
    };
    json!({
        "passed": report.passed(),
        "fundamental_identity": fi_report_to_json(&report.fundamental_identity),
        "form_symmetric": report.form_symmetric,
        "form_nondegenerate": report.form_nondegenerate,
        "invariance_defects": invariance,
        "isotropy_defects": isotropy,
        "closure_defects": leaks(&report.closure_defects),
        "projection_defects": leaks(&report.projection_defects),
    })
}

/// Condition generators as canonical text strings.
pub fn conditions_to_json(generators: &[Scalar]) -> Value {
    let texts: Vec<String> = generators.iter().map(|g| g.to_string()).collect();
    json!({ "generators": texts })
}

pub fn delta_family_to_json(family: &DeltaFamily) -> Value {
    json!({
        "id": family.catalog_id.as_str(),
        "parameters": family.parameter_names(),
        "coproduct": coproduct_to_json(&family.coproduct),
    })
}

pub fn delta_family_solution_to_json(solution: &DeltaFamilySolution) -> Value {
    json!({
        "family": delta_family_to_json(&solution.family),
        "null_space_dim": solution.null_space_dim,
        "family_dimension": solution.family_dimension,
        "family_in_null_space": solution.family_in_null_space,
        "generators_independent": solution.generators_independent,
        "family_spans_null_space": solution.family_spans_null_space(),
    })
}

/// `{"base": id, "base_dim": n, "parameters": [...], "algebra": ...,
/// "gram": [[scalar; 2n]; 2n]}` — the full double, reconstructible by
/// [`double_from_json`].
pub fn double_to_json(double: &DoubleAlgebra<Scalar>, base: &str, parameters: &[String]) -> Value {
    let gram = double.form().gram();
    let gram_rows: Vec<Value> = (0..gram.rows())
        .map(|i| {
            Value::Array(
                (0..gram.cols())
                    .map(|j| scalar_to_json(gram.at(i, j)))
                    .collect(),
            )
        })
        .collect();
    json!({
        "base": base,
        "base_dim": double.base_dim(),
        "parameters": parameters,
        "algebra": algebra_to_json(double.algebra()),
        "gram": gram_rows,
    })
}

pub fn double_from_json(v: &Value) -> Result<(String, Vec<String>, DoubleAlgebra<Scalar>)> {
    let obj = as_object(v)?;
    let base = field(obj, "base")?
        .as_str()
        .ok_or_else(|| parse_error("field `base` must be a string"))?
        .to_string();
    let base_dim = usize_field(obj, "base_dim")?;
    let parameters: Vec<String> = array_field(obj, "parameters")?
        .iter()
        .map(|p| {
            p.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_error("parameters must be strings"))
        })
        .collect::<Result<_>>()?;
    let algebra = algebra_from_json(field(obj, "algebra")?)?;
    let gram_rows = array_field(obj, "gram")?;
    let total = 2 * base_dim;
    let mut gram = Matrix::zero(total, total);
    if gram_rows.len() != total {
        return Err(parse_error(format!(
            "gram matrix needs {total} rows, got {}",
            gram_rows.len()
        )));
    }
    for (i, row) in gram_rows.iter().enumerate() {
        let entries = scalar_vec_from_json(row, total, "gram row")?;
        for (j, entry) in entries.into_iter().enumerate() {
            gram.set(i, j, entry);
        }
    }
    let form = BilinearForm::new(gram)?;
    let double = DoubleAlgebra::from_parts(base_dim, algebra, form)?;
    Ok((base, parameters, double))
}
