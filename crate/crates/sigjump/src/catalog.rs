//! Knot catalogs on disk: a JSON array of
//! `{"name", "braid", "delta"?, "p"?}` records.

use std::path::Path;

use serde::Deserialize;
use sigjump_core::qjump::KnotRecord;
use sigjump_core::{BraidWord, SymPoly};

/// The eight knots shipped with the crate (Δ and P known for 3₁, 4₁, 7₂, 7₃).
pub const BUILTIN: &str = include_str!("../data/catalog.json");

#[derive(Debug, thiserror::Error)]
pub enum CatalogError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{origin}:{line}:{column}: {msg}")]
    Syntax { origin: String, line: usize, column: usize, msg: String },
    #[error("{origin}:{line}: record {index} ({name}), field \"{field}\": {msg}")]
    Field { origin: String, line: usize, index: usize, name: String, field: &'static str, msg: String },
}

/// Polynomials may be written as coefficient lists or as text.
#[derive(Deserialize)]
#[serde(untagged)]
enum PolyField {
    List(Vec<i64>),
    Text(String),
}

impl PolyField {
    fn to_poly(&self) -> sigjump_core::Result<SymPoly> {
        match self {
            PolyField::List(c) => Ok(SymPoly::from_i64s(c)),
            PolyField::Text(s) => SymPoly::parse(s),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    name: String,
    braid: Vec<i32>,
    #[serde(default)]
    delta: Option<PolyField>,
    #[serde(default)]
    p: Option<PolyField>,
}

/// 1-based line of the record's `"name"` entry, for error messages.
fn line_of(text: &str, name: &str) -> usize {
    let needle = serde_json::to_string(name).unwrap_or_default();
    text.lines().position(|l| l.contains("\"name\"") && l.contains(&needle)).map_or(0, |i| i + 1)
}

pub fn parse_catalog(text: &str, origin: &str) -> Result<Vec<KnotRecord>, CatalogError> {
    let raw: Vec<RawRecord> = serde_json::from_str(text).map_err(|e| CatalogError::Syntax {
        origin: origin.to_string(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    raw.into_iter()
        .enumerate()
        .map(|(index, r)| {
            let fail = |field: &'static str, msg: String| CatalogError::Field {
                origin: origin.to_string(),
                line: line_of(text, &r.name),
                index,
                name: r.name.clone(),
                field,
                msg,
            };
            let braid = BraidWord::new(r.braid.clone()).map_err(|e| fail("braid", e.to_string()))?;
            let delta =
                r.delta.as_ref().map(PolyField::to_poly).transpose().map_err(|e| fail("delta", e.to_string()))?;
            let p = r.p.as_ref().map(PolyField::to_poly).transpose().map_err(|e| fail("p", e.to_string()))?;
            KnotRecord::new(r.name.clone(), braid, delta, p).map_err(|e| {
                let field = if matches!(e, sigjump_core::Error::DeltaMismatch { .. }) { "delta" } else { "braid" };
                fail(field, e.to_string())
            })
        })
        .collect()
}

pub fn load_catalog(path: &Path) -> Result<Vec<KnotRecord>, CatalogError> {
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: origin.clone(), source })?;
    parse_catalog(&text, &origin)
}

pub fn builtin() -> Vec<KnotRecord> {
    parse_catalog(BUILTIN, "builtin catalog").expect("shipped catalog is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let c = builtin();
        assert_eq!(c.len(), 8);
        assert_eq!(c[3].name, "7_3");
        assert!(c[3].p1.is_some() && c[4].p1.is_none());
    }

    #[test]
    fn text_polynomials() {
        let c = parse_catalog(r#"[{"name":"t","braid":[1,1,1],"delta":"1 + x","p":"2*x + x^2"}]"#, "-").unwrap();
        assert_eq!(c[0].p1, Some(SymPoly::from_i64s(&[0, 2, 1])));
    }

    #[test]
    fn errors_point_at_the_field() {
        let text =
            "[\n {\"name\": \"a\", \"braid\": [1,1,1]},\n {\"name\": \"b\", \"braid\": [1,1,1], \"delta\": [1,2]}\n]";
        let e = parse_catalog(text, "cat.json").unwrap_err().to_string();
        assert!(e.starts_with("cat.json:3: record 1 (b), field \"delta\""), "{e}");
        let e = parse_catalog("[{\"name\": \"a\", \"braid\": [1,0]}]", "cat.json").unwrap_err().to_string();
        assert!(e.contains("field \"braid\""), "{e}");
        let e = parse_catalog("[{\"name\": \"a\",\n \"braid\": 3}]", "cat.json").unwrap_err().to_string();
        assert!(e.starts_with("cat.json:2:"), "{e}");
    }
}
