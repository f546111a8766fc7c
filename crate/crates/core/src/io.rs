//! JSON import and export. Rationals are written as `"p/q"` strings (or
//! `"p"` for integers) and basis indices are 1-based.

use serde::ser::{SerializeSeq, Serializer};
use serde_json::{json, Map, Value};

use crate::derivations::DerivationSpace;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{format_rational, parse_rational, Rational};
use crate::tpa::CommutativeProduct;

pub fn serialize_rational_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        seq.serialize_element(&format_rational(x))?;
    }
    seq.end()
}

pub fn serialize_rational_matrix<S: Serializer>(
    rows: &[Vec<Rational>],
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for row in rows {
        let strings: Vec<String> = row.iter().map(format_rational).collect();
        seq.serialize_element(&strings)?;
    }
    seq.end()
}

fn sparse_entries<'a>(
    table: impl Iterator<
        Item = (
            &'a (usize, usize),
            &'a std::collections::BTreeMap<usize, Rational>,
        ),
    >,
) -> Vec<Value> {
    table
        .map(|(&(i, j), v)| {
            let value: Vec<Value> = v
                .iter()
                .map(|(k, c)| json!({"k": k + 1, "c": format_rational(c)}))
                .collect();
            json!({"i": i + 1, "j": j + 1, "value": value})
        })
        .collect()
}

pub fn algebra_to_value(alg: &LieAlgebra) -> Value {
    json!({
        "name": alg.name(),
        "dim": alg.dim(),
        "brackets": sparse_entries(alg.brackets().iter()),
    })
}

pub fn export_algebra(alg: &LieAlgebra) -> String {
    to_pretty(&algebra_to_value(alg))
}

pub fn product_to_value(prod: &CommutativeProduct) -> Value {
    json!({
        "dim": prod.dim(),
        "products": sparse_entries(prod.table().iter()),
    })
}

pub fn export_product(prod: &CommutativeProduct) -> String {
    to_pretty(&product_to_value(prod))
}

pub fn derivation_space_to_value(space: &DerivationSpace) -> Value {
    let basis: Vec<Value> = space
        .basis_maps()
        .iter()
        .map(|m| {
            Value::Array(
                m.to_rows()
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| Value::String(format_rational(x)))
                            .collect()
                    })
                    .collect(),
            )
        })
        .collect();
    json!({"dim": space.dim(), "basis": basis})
}

pub fn export_derivation_space(space: &DerivationSpace) -> String {
    to_pretty(&derivation_space_to_value(space))
}

/// Pretty JSON for any report type.
pub fn to_json<T: serde::Serialize>(v: &T) -> String {
    to_pretty(&serde_json::to_value(v).expect("reports serialize"))
}

pub(crate) fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values always serialize")
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

fn field<'a>(obj: &'a Map<String, Value>, path: &str, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| schema(&format!("{path}.{key}"), "missing field"))
}

fn as_object<'a>(v: &'a Value, path: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| schema(path, "expected an object"))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| schema(path, "expected an array"))
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| schema(path, "expected a non-negative integer"))
}

fn as_rational(v: &Value, path: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| schema(path, e.to_string())),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap().into())),
        _ => Err(schema(path, "expected a rational string \"p/q\"")),
    }
}

fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))
}

/// `(i, j, k, c)` rows of a sparse table, checked against `dim`.
fn parse_entries(
    root: &Map<String, Value>,
    key: &str,
    dim: usize,
    strict: bool,
) -> Result<Vec<(usize, usize, usize, Rational)>> {
    let mut out = Vec::new();
    let list = as_array(field(root, "$", key)?, &format!("$.{key}"))?;
    for (r, entry) in list.iter().enumerate() {
        let path = format!("$.{key}[{r}]");
        let obj = as_object(entry, &path)?;
        let i = as_index(field(obj, &path, "i")?, &format!("{path}.i"))?;
        let j = as_index(field(obj, &path, "j")?, &format!("{path}.j"))?;
        for (name, idx) in [("i", i), ("j", j)] {
            if idx == 0 || idx > dim {
                return Err(schema(
                    &format!("{path}.{name}"),
                    format!("index {idx} outside 1..={dim}"),
                ));
            }
        }
        if (strict && i >= j) || i > j {
            let rel = if strict { "i<j" } else { "i≤j" };
            return Err(schema(&path, format!("{rel} required, found i={i}, j={j}")));
        }
        let values = as_array(field(obj, &path, "value")?, &format!("{path}.value"))?;
        for (t, term) in values.iter().enumerate() {
            let tpath = format!("{path}.value[{t}]");
            let tobj = as_object(term, &tpath)?;
            let k = as_index(field(tobj, &tpath, "k")?, &format!("{tpath}.k"))?;
            if k == 0 || k > dim {
                return Err(schema(
                    &format!("{tpath}.k"),
                    format!("index {k} outside 1..={dim}"),
                ));
            }
            let c = as_rational(field(tobj, &tpath, "c")?, &format!("{tpath}.c"))?;
            out.push((i, j, k, c));
        }
    }
    Ok(out)
}

/// Loaded algebra plus loader diagnostics.
#[derive(Clone, Debug)]
pub struct ImportedAlgebra {
    pub algebra: LieAlgebra,
    /// Set when the table fails the Jacobi identity.
    pub warnings: Vec<String>,
}

pub fn import_algebra(text: &str) -> Result<ImportedAlgebra> {
    let root = parse_text(text)?;
    let obj = as_object(&root, "$")?;
    let name = field(obj, "$", "name")?
        .as_str()
        .ok_or_else(|| schema("$.name", "expected a string"))?;
    let dim = as_index(field(obj, "$", "dim")?, "$.dim")?;
    let entries = parse_entries(obj, "brackets", dim, true)?;
    let algebra = LieAlgebra::from_table(name, dim, entries)?;
    let jacobi = algebra.jacobi_check();
    let warnings = match jacobi.witness() {
        None => Vec::new(),
        Some(w) => vec![format!(
            "Jacobi identity fails on {} triple(s), first at {:?}",
            jacobi.violations.len(),
            w.indices
        )],
    };
    Ok(ImportedAlgebra { algebra, warnings })
}

pub fn import_product(text: &str) -> Result<CommutativeProduct> {
    let root = parse_text(text)?;
    let obj = as_object(&root, "$")?;
    let dim = as_index(field(obj, "$", "dim")?, "$.dim")?;
    let entries = parse_entries(obj, "products", dim, false)?;
    CommutativeProduct::from_entries(dim, entries)
}
