//! JSON interchange for algebras.
//!
//! The document format mirrors the multiplication table directly, with
//! 1-based indices and coefficients as exact `"num/den"` strings:
//!
//! ```json
//! {
//!   "dim": 3,
//!   "basis": ["e1", "e2", "e3"],
//!   "products": [
//!     {"left": 1, "right": 1, "result": [{"index": 2, "coeff": "1"}]}
//!   ],
//!   "metadata": {"family": "null"}
//! }
//! ```
//!
//! Parsing is strict about the schema (with field-path diagnostics) but
//! ignores unknown fields, reporting each as a warning.

use std::collections::BTreeMap;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Upper bound on accepted document dimensions; keeps untrusted input from
/// forcing huge allocations.
pub const MAX_DOCUMENT_DIM: usize = 4096;

/// Serializable form of an algebra's multiplication table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AlgebraDocument {
    pub dim: usize,
    pub basis: Vec<String>,
    pub products: Vec<ProductRecord>,
    pub metadata: BTreeMap<String, Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProductRecord {
    pub left: usize,
    pub right: usize,
    pub result: Vec<ResultTerm>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultTerm {
    pub index: usize,
    pub coeff: String,
}

/// Renders an algebra as a document; labels default to e1..en.
pub fn document_from_algebra(a: &Algebra) -> AlgebraDocument {
    let basis = (1..=a.dim()).map(|i| a.label(i)).collect();
    let mut products = Vec::new();
    for (&(left, right), entry) in a.products() {
        let result = entry
            .iter()
            .map(|(index, coeff)| ResultTerm {
                index: *index,
                coeff: coeff.to_string(),
            })
            .collect();
        products.push(ProductRecord {
            left,
            right,
            result,
        });
    }
    AlgebraDocument {
        dim: a.dim(),
        basis,
        products,
        metadata: BTreeMap::new(),
    }
}

/// Serializes a document as pretty JSON with a trailing newline.
pub fn emit_document(doc: &AlgebraDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
    s.push('\n');
    s
}

pub fn emit_algebra(a: &Algebra) -> String {
    emit_document(&document_from_algebra(a))
}

fn doc_err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Document(format!("{path}: {msg}"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| doc_err(path, "expected a non-negative integer"))
}

fn known_fields(obj: &serde_json::Map<String, Value>, known: &[&str], path: &str, warnings: &mut Vec<String>) {
    for key in obj.keys() {
        if !known.contains(&key.as_str()) {
            warnings.push(format!("ignoring unknown field `{key}` at {path}"));
        }
    }
}

/// Parses JSON text into a document plus warnings for ignored fields.
pub fn parse_document(text: &str) -> Result<(AlgebraDocument, Vec<String>)> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Document(format!("invalid JSON: {e}")))?;
    let mut warnings = Vec::new();
    let obj = value
        .as_object()
        .ok_or_else(|| doc_err("$", "expected a JSON object"))?;
    known_fields(obj, &["dim", "basis", "products", "metadata"], "$", &mut warnings);

    let dim = as_usize(
        obj.get("dim").ok_or_else(|| doc_err("$", "missing field `dim`"))?,
        "$.dim",
    )?;
    if dim > MAX_DOCUMENT_DIM {
        return Err(doc_err(
            "$.dim",
            format!("dimension {dim} exceeds the maximum {MAX_DOCUMENT_DIM}"),
        ));
    }

    let basis: Vec<String> = match obj.get("basis") {
        None => (1..=dim).map(|i| format!("e{i}")).collect(),
        Some(v) => {
            let arr = v
                .as_array()
                .ok_or_else(|| doc_err("$.basis", "expected an array of strings"))?;
            if arr.len() != dim {
                return Err(doc_err(
                    "$.basis",
                    format!("expected {dim} labels, got {}", arr.len()),
                ));
            }
            arr.iter()
                .enumerate()
                .map(|(i, x)| {
                    x.as_str()
                        .map(str::to_string)
                        .ok_or_else(|| doc_err(&format!("$.basis[{i}]"), "expected a string"))
                })
                .collect::<Result<_>>()?
        }
    };

    let mut products = Vec::new();
    if let Some(v) = obj.get("products") {
        let arr = v
            .as_array()
            .ok_or_else(|| doc_err("$.products", "expected an array"))?;
        for (pi, pv) in arr.iter().enumerate() {
            let path = format!("$.products[{pi}]");
            let pobj = pv
                .as_object()
                .ok_or_else(|| doc_err(&path, "expected an object"))?;
            known_fields(pobj, &["left", "right", "result"], &path, &mut warnings);
            let left = as_usize(
                pobj.get("left")
                    .ok_or_else(|| doc_err(&path, "missing field `left`"))?,
                &format!("{path}.left"),
            )?;
            let right = as_usize(
                pobj.get("right")
                    .ok_or_else(|| doc_err(&path, "missing field `right`"))?,
                &format!("{path}.right"),
            )?;
            let rarr = pobj
                .get("result")
                .ok_or_else(|| doc_err(&path, "missing field `result`"))?
                .as_array()
                .ok_or_else(|| doc_err(&format!("{path}.result"), "expected an array"))?;
            let mut result = Vec::new();
            for (ti, tv) in rarr.iter().enumerate() {
                let tpath = format!("{path}.result[{ti}]");
                let tobj = tv
                    .as_object()
                    .ok_or_else(|| doc_err(&tpath, "expected an object"))?;
                known_fields(tobj, &["index", "coeff"], &tpath, &mut warnings);
                let index = as_usize(
                    tobj.get("index")
                        .ok_or_else(|| doc_err(&tpath, "missing field `index`"))?,
                    &format!("{tpath}.index"),
                )?;
                let coeff = tobj
                    .get("coeff")
                    .ok_or_else(|| doc_err(&tpath, "missing field `coeff`"))?
                    .as_str()
                    .ok_or_else(|| doc_err(&format!("{tpath}.coeff"), "expected a string"))?
                    .to_string();
                // validate the coefficient early for a precise diagnostic
                Scalar::from_str(&coeff)
                    .map_err(|e| doc_err(&format!("{tpath}.coeff"), e))?;
                result.push(ResultTerm { index, coeff });
            }
            products.push(ProductRecord {
                left,
                right,
                result,
            });
        }
    }

    let metadata = match obj.get("metadata") {
        None => BTreeMap::new(),
        Some(v) => {
            let mobj = v
                .as_object()
                .ok_or_else(|| doc_err("$.metadata", "expected an object"))?;
            mobj.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
        }
    };

    Ok((
        AlgebraDocument {
            dim,
            basis,
            products,
            metadata,
        },
        warnings,
    ))
}

type TableEntries = Vec<((usize, usize), Vec<(usize, Scalar)>)>;

/// Converts a parsed document into a validated algebra.
pub fn algebra_from_document(doc: &AlgebraDocument) -> Result<Algebra> {
    let mut table: TableEntries = Vec::new();
    let mut seen: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (pi, rec) in doc.products.iter().enumerate() {
        if let Some(prev) = seen.insert((rec.left, rec.right), pi) {
            return Err(Error::Document(format!(
                "$.products[{pi}]: duplicate product ({},{}) already given at $.products[{prev}]",
                rec.left, rec.right
            )));
        }
        let mut entry = Vec::new();
        for (ti, term) in rec.result.iter().enumerate() {
            let coeff = Scalar::from_str(&term.coeff).map_err(|e| {
                Error::Document(format!("$.products[{pi}].result[{ti}].coeff: {e}"))
            })?;
            entry.push((term.index, coeff));
        }
        table.push(((rec.left, rec.right), entry));
    }
    let algebra = Algebra::new(doc.dim, table)
        .map_err(|e| Error::Document(format!("$.products: {e}")))?;
    algebra.with_labels(doc.basis.clone())
}

/// Parses JSON text directly into an algebra, returning schema warnings.
pub fn parse_algebra(text: &str) -> Result<(Algebra, Vec<String>)> {
    let (doc, warnings) = parse_document(text)?;
    let algebra = algebra_from_document(&doc)?;
    Ok((algebra, warnings))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{null_filiform, quasi_filiform_variant, zero_algebra};
    use proptest::prelude::*;

    #[test]
    fn null_filiform_roundtrip() {
        let a = null_filiform(3).unwrap();
        let text = emit_algebra(&a);
        let (parsed, warnings) = parse_algebra(&text).unwrap();
        assert!(warnings.is_empty());
        assert_eq!(parsed, a);
        assert_eq!(parsed.labels(), a.labels());
    }

    #[test]
    fn empty_products_is_zero_algebra() {
        let (a, _) = parse_algebra(r#"{"dim": 2, "products": []}"#).unwrap();
        assert_eq!(a, zero_algebra(2));
        let (a, _) = parse_algebra(r#"{"dim": 2}"#).unwrap();
        assert_eq!(a, zero_algebra(2));
    }

    #[test]
    fn bad_coefficients_are_diagnosed() {
        let text = r#"{"dim": 1, "products": [{"left": 1, "right": 1, "result": [{"index": 1, "coeff": "1/0"}]}]}"#;
        let err = parse_algebra(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("$.products[0].result[0].coeff"), "{msg}");
        assert!(msg.contains("zero denominator"), "{msg}");
    }

    #[test]
    fn schema_violations_carry_paths() {
        for (text, needle) in [
            (r#"[1,2]"#, "expected a JSON object"),
            (r#"{"basis": []}"#, "missing field `dim`"),
            (r#"{"dim": 2, "basis": ["x"]}"#, "expected 2 labels"),
            (
                r#"{"dim": 1, "products": [{"left": 1, "result": []}]}"#,
                "missing field `right`",
            ),
            (
                r#"{"dim": 1, "products": [{"left": 0, "right": 1, "result": [{"index": 1, "coeff": "1"}]}]}"#,
                "out of range",
            ),
            (r#"{"dim": 99999999999}"#, "exceeds the maximum"),
            ("{", "invalid JSON"),
        ] {
            let err = parse_algebra(text).unwrap_err();
            assert!(err.to_string().contains(needle), "{text} -> {err}");
        }
    }

    #[test]
    fn unknown_fields_warn_but_parse() {
        let text = r#"{"dim": 1, "products": [], "color": "red"}"#;
        let (a, warnings) = parse_algebra(text).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].contains("color"));
    }

    #[test]
    fn duplicate_products_are_rejected() {
        let text = r#"{"dim": 2, "products": [
            {"left": 1, "right": 1, "result": [{"index": 2, "coeff": "1"}]},
            {"left": 1, "right": 1, "result": [{"index": 2, "coeff": "2"}]}
        ]}"#;
        let err = parse_algebra(text).unwrap_err();
        assert!(err.to_string().contains("duplicate product"));
    }

    #[test]
    fn metadata_is_preserved() {
        let text = r#"{"dim": 1, "metadata": {"family": "null", "note": 5}}"#;
        let (doc, _) = parse_document(text).unwrap();
        assert_eq!(doc.metadata["family"], Value::String("null".into()));
        let emitted = emit_document(&doc);
        let (again, _) = parse_document(&emitted).unwrap();
        assert_eq!(doc, again);
    }

    #[test]
    fn rational_coefficients_roundtrip() {
        let alpha = Scalar::new(-3, 7).unwrap();
        let a = quasi_filiform_variant(7, 2, Some(&alpha)).unwrap();
        let (parsed, _) = parse_algebra(&emit_algebra(&a)).unwrap();
        assert_eq!(parsed, a);
    }

    // random sparse tables survive the round trip
    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn random_table_roundtrip(
            dim in 1usize..5,
            entries in proptest::collection::vec(
                (1usize..5, 1usize..5, 1usize..5, -9i64..10, 1i64..10),
                0..6,
            )
        ) {
            let mut table: super::TableEntries = Vec::new();
            let mut used = std::collections::BTreeSet::new();
            for (i, j, k, num, den) in entries {
                let (i, j, k) = (i.min(dim), j.min(dim), k.min(dim));
                if num == 0 || !used.insert((i, j)) {
                    continue;
                }
                table.push(((i, j), vec![(k, Scalar::new(num, den).unwrap())]));
            }
            let a = Algebra::new(dim, table).unwrap();
            let (parsed, warnings) = parse_algebra(&emit_algebra(&a)).unwrap();
            prop_assert!(warnings.is_empty());
            prop_assert_eq!(parsed, a);
        }
    }
}
