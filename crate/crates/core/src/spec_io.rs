//! Spec files (JSON or TOML) and JSON renderings of reports.
//!
//! Rationals are written as strings `"p/q"` or `"p"`. Integers are also
//! accepted on input; floating point numbers never are.
//!
//! A pentad spec looks like
//!
//! ```json
//! { "schema": "pentad_spec_v1", "r": 1, "n": 1,
//!   "A": [["1/8"]], "D": [["2"]], "Gamma": ["4"] }
//! ```
//!
//! `Gamma` may be a full matrix or its diagonal. A builder spec has a
//! `"builder"` key instead; see [`resolve`].

use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::constructions::{self, FiniteCartanData};
use crate::engine::StructureReport;
use crate::error::Error;
use crate::modules::{Direction, GradedModule};
use crate::pentad::{self, PentadReport};
use crate::{QFiniteCartanData, QMatrix, QPentad, Rational};

pub const SCHEMA: &str = "pentad_spec_v1";

#[derive(Debug, Error)]
pub enum SpecError {
    /// The document is malformed: bad syntax, missing keys, wrong types.
    #[error("parse error: {0}")]
    Parse(String),
    /// The document is well formed but its data violates an invariant.
    #[error("{0}")]
    Invalid(#[from] Error),
}

type SpecResult<T> = std::result::Result<T, SpecError>;

fn parse_err<T>(msg: impl Into<String>) -> SpecResult<T> {
    Err(SpecError::Parse(msg.into()))
}

/// A resolved spec: the pentad plus the optional module request.
#[derive(Clone, Debug, PartialEq)]
pub struct PentadSpec {
    pub pentad: QPentad,
    pub module: Option<ModuleSpec>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ModuleSpec {
    pub weight: Vec<Rational>,
    pub direction: Direction,
}

pub fn parse_rational(s: &str) -> SpecResult<Rational> {
    let s = s.trim();
    let bad = || SpecError::Parse(format!("not a rational number: {s:?}"));
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let p: num_bigint::BigInt = p.parse().map_err(|_| bad())?;
    let q: num_bigint::BigInt = q.parse().map_err(|_| bad())?;
    if q == num_bigint::BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(p, q))
}

/// `"p"` for integers and `"p/q"` otherwise, in lowest terms.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn rational_value(v: &Value, what: &str) -> SpecResult<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        Value::Number(_) => parse_err(format!("{what}: floating point entries are not accepted ({v})")),
        _ => parse_err(format!("{what}: expected a rational, got {v}")),
    }
}

fn vector_value(v: &Value, what: &str) -> SpecResult<Vec<Rational>> {
    let Value::Array(items) = v else {
        return parse_err(format!("{what}: expected a list"));
    };
    items.iter().map(|x| rational_value(x, what)).collect()
}

fn matrix_value(v: &Value, what: &str) -> SpecResult<QMatrix> {
    let Value::Array(rows) = v else {
        return parse_err(format!("{what}: expected a list of rows"));
    };
    let rows = rows
        .iter()
        .map(|r| vector_value(r, what))
        .collect::<SpecResult<Vec<_>>>()?;
    QMatrix::from_rows(rows).map_err(|_| SpecError::Parse(format!("{what}: rows have different lengths")))
}

/// A matrix, or a flat list read as a diagonal.
fn diagonal_value(v: &Value, what: &str) -> SpecResult<QMatrix> {
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array()) => Ok(QMatrix::diag(&vector_value(v, what)?)),
        _ => matrix_value(v, what),
    }
}

fn int_value(v: &Value, what: &str) -> SpecResult<i64> {
    v.as_i64()
        .ok_or_else(|| SpecError::Parse(format!("{what}: expected an integer, got {v}")))
}

fn usize_value(v: &Value, what: &str) -> SpecResult<usize> {
    v.as_u64()
        .map(|u| u as usize)
        .ok_or_else(|| SpecError::Parse(format!("{what}: expected a nonnegative integer, got {v}")))
}

fn int_list(v: &Value, what: &str) -> SpecResult<Vec<i64>> {
    let Value::Array(items) = v else {
        return parse_err(format!("{what}: expected a list of integers"));
    };
    items.iter().map(|x| int_value(x, what)).collect()
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> SpecResult<&'a Value> {
    obj.get(key)
        .ok_or_else(|| SpecError::Parse(format!("missing key {key:?}")))
}

/// Reads JSON, or TOML when the text is not JSON.
pub fn parse_document(text: &str) -> SpecResult<Value> {
    match serde_json::from_str::<Value>(text) {
        Ok(v) => Ok(v),
        Err(json_err) => toml::from_str::<Value>(text)
            .map_err(|toml_err| SpecError::Parse(format!("neither JSON ({json_err}) nor TOML ({toml_err})"))),
    }
}

/// Loads and resolves a spec file; relative paths inside it are taken
/// relative to the file.
pub fn load(path: &Path) -> SpecResult<PentadSpec> {
    let text =
        std::fs::read_to_string(path).map_err(|e| SpecError::Parse(format!("cannot read {}: {e}", path.display())))?;
    let doc = parse_document(&text)?;
    resolve(&doc, path.parent().unwrap_or(Path::new(".")))
}

/// Parses and resolves spec text with no base directory.
pub fn parse_spec(text: &str) -> SpecResult<PentadSpec> {
    resolve(&parse_document(text)?, Path::new("."))
}

/// Turns a pentad spec or a builder spec into a pentad.
///
/// Builders: `from_semisimple`, `from_contragredient`, `from_reductive`,
/// `cs_family`, `direct_sum`, `chain_append_weights`,
/// `scalar_augmented_embedding`, `reductive_rep_embedding` and
/// `shuffle_columns`. Nested pentads may be inline specs or paths.
pub fn resolve(doc: &Value, base: &Path) -> SpecResult<PentadSpec> {
    let Value::Object(obj) = doc else {
        return parse_err("a spec must be an object");
    };
    let module = obj.get("module").map(module_value).transpose()?;
    let pentad = if let Some(b) = obj.get("builder") {
        let name = b
            .as_str()
            .ok_or_else(|| SpecError::Parse("builder must be a string".into()))?;
        build(name, obj, base)?
    } else {
        pentad_value(obj)?
    };
    Ok(PentadSpec { pentad, module })
}

fn module_value(v: &Value) -> SpecResult<ModuleSpec> {
    let Value::Object(obj) = v else {
        return parse_err("module: expected an object");
    };
    let weight = vector_value(field(obj, "weight")?, "module.weight")?;
    let direction = match obj.get("direction").and_then(Value::as_str).unwrap_or("positive") {
        "positive" => Direction::Positive,
        "negative" => Direction::Negative,
        other => return parse_err(format!("module.direction: unknown direction {other:?}")),
    };
    Ok(ModuleSpec { weight, direction })
}

fn pentad_value(obj: &Map<String, Value>) -> SpecResult<QPentad> {
    match obj.get("schema").and_then(Value::as_str) {
        Some(SCHEMA) | None => {}
        Some(other) => return parse_err(format!("unsupported schema {other:?}")),
    }
    let a = matrix_value(field(obj, "A")?, "A")?;
    let d = matrix_value(field(obj, "D")?, "D")?;
    let gamma = diagonal_value(field(obj, "Gamma")?, "Gamma")?;
    if let Some(r) = obj.get("r") {
        let r = usize_value(r, "r")?;
        if r != d.rows() {
            return Err(Error::DimensionMismatch(format!("r = {r} but D has {} rows", d.rows())).into());
        }
    }
    if let Some(n) = obj.get("n") {
        let n = usize_value(n, "n")?;
        if n != d.cols() {
            return Err(Error::DimensionMismatch(format!("n = {n} but D has {} columns", d.cols())).into());
        }
    }
    Ok(QPentad::new(a, d, gamma)?)
}

fn nested(v: &Value, base: &Path) -> SpecResult<QPentad> {
    match v {
        Value::String(p) => {
            let path: PathBuf = base.join(p);
            Ok(load(&path)?.pentad)
        }
        _ => Ok(resolve(v, base)?.pentad),
    }
}

fn cartan_data(obj: &Map<String, Value>) -> SpecResult<QFiniteCartanData> {
    if let Some(t) = obj.get("type") {
        let t = t
            .as_str()
            .ok_or_else(|| SpecError::Parse("type must be a string".into()))?;
        let rank = usize_value(field(obj, "rank")?, "rank")?;
        return Ok(FiniteCartanData::of_type(t, rank)?);
    }
    let x = matrix_value(field(obj, "X")?, "X")?;
    let norms = vector_value(field(obj, "root_norms")?, "root_norms")?;
    Ok(FiniteCartanData::new(x, norms)?)
}

fn build(name: &str, obj: &Map<String, Value>, base: &Path) -> SpecResult<QPentad> {
    use constructions as c;
    Ok(match name {
        "from_semisimple" => c::from_semisimple(&cartan_data(obj)?)?,
        "from_contragredient" => c::from_contragredient(&matrix_value(field(obj, "X")?, "X")?)?,
        "from_reductive" => {
            let k = usize_value(field(obj, "k")?, "k")?;
            let a_z = match obj.get("A_Z") {
                Some(v) => matrix_value(v, "A_Z")?,
                None => QMatrix::identity(k),
            };
            c::from_reductive(k, &cartan_data(obj)?, &a_z)?
        }
        "cs_family" => {
            let n = int_list(field(obj, "n")?, "n")?;
            let s = rational_value(field(obj, "s")?, "s")?;
            c::cs_family_pentad(&cartan_data(obj)?, &n, &s)?.0
        }
        "direct_sum" => {
            let Value::Array(items) = field(obj, "pentads")? else {
                return parse_err("pentads: expected a list");
            };
            let mut parts = items.iter().map(|v| nested(v, base));
            let first = parts
                .next()
                .ok_or_else(|| SpecError::Parse("pentads: empty list".into()))??;
            parts.try_fold(first, |acc, p| Ok::<_, SpecError>(pentad::direct_sum(&acc, &p?)))?
        }
        "chain_append_weights" => {
            let p = nested(field(obj, "pentad")?, base)?;
            c::chain_append_weights(&p, &matrix_value(field(obj, "weights")?, "weights")?)?
        }
        "scalar_augmented_embedding" => {
            let p = nested(field(obj, "pentad")?, base)?;
            let weights = matrix_value(field(obj, "weights")?, "weights")?;
            let a_tilde = matrix_value(field(obj, "A_tilde")?, "A_tilde")?;
            c::scalar_augmented_embedding(&p, &weights, &a_tilde)?.0
        }
        "reductive_rep_embedding" => {
            let Value::Array(rows) = field(obj, "N")? else {
                return parse_err("N: expected a list of rows");
            };
            let table = rows.iter().map(|r| int_list(r, "N")).collect::<SpecResult<Vec<_>>>()?;
            let a_z = matrix_value(field(obj, "A_Z")?, "A_Z")?;
            c::reductive_rep_embedding(&cartan_data(obj)?, &table, &a_z)?.0
        }
        "shuffle_columns" => {
            let p = nested(field(obj, "pentad")?, base)?;
            let Value::Array(perm) = field(obj, "permutation")? else {
                return parse_err("permutation: expected a list");
            };
            let perm = perm
                .iter()
                .map(|v| usize_value(v, "permutation"))
                .collect::<SpecResult<Vec<_>>>()?;
            let gamma = diagonal_value(field(obj, "Gamma")?, "Gamma")?;
            pentad::shuffle_columns(&p, &perm, &gamma)?
        }
        other => return parse_err(format!("unknown builder {other:?}")),
    })
}

fn rational_json(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

fn vector_json(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational_json).collect())
}

pub fn matrix_json(m: &QMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(m.row(i))).collect())
}

/// The pentad as a `pentad_spec_v1` document, `Gamma` as its diagonal.
pub fn pentad_json(p: &QPentad) -> Value {
    json!({
        "schema": SCHEMA,
        "r": p.r(),
        "n": p.n(),
        "A": matrix_json(p.a()),
        "D": matrix_json(p.d()),
        "Gamma": vector_json(p.gamma()),
    })
}

pub fn pentad_report_json(rep: &PentadReport<Rational>) -> Value {
    json!({
        "cartan": matrix_json(&rep.cartan.matrix),
        "regular": rep.regular,
        "rank_D": rep.rank_d,
        "ann_dim": rep.ann_dim,
        "phi_image_dim": rep.phi_image_dim,
        "transitive": rep.transitive,
        "symmetric": rep.symmetric,
        "h_vectors": Value::Array(rep.h_vectors.iter().map(|h| vector_json(h)).collect()),
    })
}

fn dims_json(dims: &[(i64, usize)]) -> Value {
    Value::Object(dims.iter().map(|(k, d)| (k.to_string(), json!(d))).collect())
}

pub fn structure_report_json(rep: &StructureReport<Rational>) -> Value {
    let roots: Vec<Value> = rep
        .roots
        .iter()
        .map(|r| json!({ "degree": r.degree, "weight": vector_json(&r.weight), "mult": r.mult }))
        .collect();
    let decomposition = rep.decomposition.as_ref().map(|d| {
        json!({
            "center_dim": d.center_dim,
            "contragredient_dims": dims_json(&d.contragredient_dims),
            "matches": d.matches,
        })
    });
    json!({
        "max_degree": rep.max_degree,
        "dims": dims_json(&rep.dims),
        "finite": rep.finite,
        "total_dim": rep.total_dim,
        "computed_dim": rep.computed_dim,
        "truncated": rep.truncated,
        "center_dim_0": rep.center_dim_0,
        "joint_kernel_dims": dims_json(&rep.joint_kernel_dims),
        "roots": roots,
        "decomposition": decomposition,
        "note": rep.note,
    })
}

pub fn module_json(m: &GradedModule<Rational>) -> Value {
    json!({
        "direction": match m.direction() { Direction::Positive => "positive", Direction::Negative => "negative" },
        "base_weights": Value::Array(m.base_weights().iter().map(|w| vector_json(w)).collect()),
        "max_degree": m.max_degree(),
        "dims": dims_json(&m.dims()),
        "terminated": m.terminated(),
        "total_dim": m.total_dim(),
    })
}
