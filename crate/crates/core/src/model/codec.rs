//! The `udg-drawing/1` file format.
//!
//! ```text
//! {
//!   "format": "udg-drawing/1",
//!   "field": "Q(sqrt3)",
//!   "vertices": [[x, y], ...],      // each coordinate ["a_num","a_den","b_num","b_den"]
//!   "edges": [[i, j], ...],         // zero-based, i < j, sorted
//!   "meta": {"key": "value", ...}
//! }
//! ```
//!
//! Files are written canonically (reduced fractions, sorted edges, one vertex
//! per line) so that equal drawings produce identical bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::Value;

use super::drawing::{Drawing, Edge};
use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::numeric::QField;

pub const FORMAT: &str = "udg-drawing/1";
pub const FIELD: &str = "Q(sqrt3)";

/// Non-fatal normalizations applied while loading.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub normalized: Vec<String>,
}

fn coord_json(q: &QField) -> String {
    let [an, ad, bn, bd] = q.parts();
    format!("[\"{an}\",\"{ad}\",\"{bn}\",\"{bd}\"]")
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("string serialization")
}

/// Canonical text of a drawing.
pub fn to_string(d: &Drawing) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"format\": {},\n", json_str(FORMAT)));
    out.push_str(&format!("  \"field\": {},\n", json_str(FIELD)));
    out.push_str("  \"vertices\": [");
    for (i, p) in d.vertices().iter().enumerate() {
        out.push_str(if i == 0 { "\n    " } else { ",\n    " });
        out.push_str(&format!("[{}, {}]", coord_json(&p.x), coord_json(&p.y)));
    }
    out.push_str(if d.n() > 0 { "\n  ],\n" } else { "],\n" });
    out.push_str("  \"edges\": [");
    for (k, (i, j)) in d.edges().iter().enumerate() {
        if k % 12 == 0 {
            out.push_str(if k == 0 { "\n    " } else { ",\n    " });
        } else {
            out.push_str(", ");
        }
        out.push_str(&format!("[{i}, {j}]"));
    }
    out.push_str(if d.e() > 0 { "\n  ],\n" } else { "],\n" });
    out.push_str("  \"meta\": {");
    for (k, (key, val)) in d.meta().iter().enumerate() {
        out.push_str(if k == 0 { "\n    " } else { ",\n    " });
        out.push_str(&format!("{}: {}", json_str(key), json_str(val)));
    }
    out.push_str(if d.meta().is_empty() { "}\n" } else { "\n  }\n" });
    out.push_str("}\n");
    out
}

pub fn save(path: impl AsRef<Path>, d: &Drawing) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, to_string(d))
        .map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn load(path: impl AsRef<Path>) -> Result<(Drawing, LoadReport)> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    from_str(&text).map_err(|e| match e {
        Error::Parse { context, message } => {
            Error::Parse { context: format!("{}: {context}", path.display()), message }
        }
        other => other,
    })
}

fn perr(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { context: context.into(), message: message.into() }
}

fn parse_int(v: &Value, ctx: &str) -> Result<BigInt> {
    let s = v.as_str().ok_or_else(|| perr(ctx, "expected a decimal integer string"))?;
    s.parse::<BigInt>().map_err(|_| perr(ctx, format!("not an integer: {s:?}")))
}

fn parse_coord(v: &Value, ctx: &str, rep: &mut LoadReport) -> Result<QField> {
    let arr = v.as_array().ok_or_else(|| perr(ctx, "expected an array of 4 strings"))?;
    if arr.len() != 4 {
        return Err(perr(ctx, format!("expected 4 parts, found {}", arr.len())));
    }
    let parts: Vec<BigInt> = arr
        .iter()
        .enumerate()
        .map(|(k, x)| parse_int(x, &format!("{ctx}[{k}]")))
        .collect::<Result<_>>()?;
    let [an, ad, bn, bd] = [&parts[0], &parts[1], &parts[2], &parts[3]];
    let zero = BigInt::from(0);
    if *ad == zero {
        return Err(perr(format!("{ctx}[1]"), "denominator is zero"));
    }
    if *bd == zero {
        return Err(perr(format!("{ctx}[3]"), "denominator is zero"));
    }
    let q = QField::from_parts(an.clone(), ad.clone(), bn.clone(), bd.clone())?;
    if q.parts() != [an.clone(), ad.clone(), bn.clone(), bd.clone()] {
        rep.normalized.push(format!("{ctx}: fraction reduced to {}", coord_json(&q)));
    }
    Ok(q)
}

fn parse_index(v: &Value, ctx: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| perr(ctx, "expected a non-negative integer"))
}

/// Parse, normalize, and check structural invariants.
pub fn from_str(text: &str) -> Result<(Drawing, LoadReport)> {
    let root: Value = serde_json::from_str(text)
        .map_err(|e| perr(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let obj = root.as_object().ok_or_else(|| perr("root", "expected an object"))?;
    let mut rep = LoadReport::default();

    match obj.get("format").and_then(Value::as_str) {
        Some(FORMAT) => {}
        Some(other) => return Err(perr("format", format!("unsupported format {other:?}"))),
        None => return Err(perr("format", "missing")),
    }
    match obj.get("field").and_then(Value::as_str) {
        Some(FIELD) => {}
        Some(other) => return Err(perr("field", format!("unsupported field {other:?}"))),
        None => return Err(perr("field", "missing")),
    }

    let verts = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| perr("vertices", "missing or not an array"))?;
    let mut vertices = Vec::with_capacity(verts.len());
    for (i, v) in verts.iter().enumerate() {
        let ctx = format!("vertices[{i}]");
        let xy = v.as_array().ok_or_else(|| perr(&ctx, "expected [x, y]"))?;
        if xy.len() != 2 {
            return Err(perr(&ctx, "expected [x, y]"));
        }
        let x = parse_coord(&xy[0], &format!("{ctx}[0]"), &mut rep)?;
        let y = parse_coord(&xy[1], &format!("{ctx}[1]"), &mut rep)?;
        vertices.push(Point::new(x, y));
    }

    let es = obj
        .get("edges")
        .and_then(Value::as_array)
        .ok_or_else(|| perr("edges", "missing or not an array"))?;
    let mut edges: Vec<Edge> = Vec::with_capacity(es.len());
    for (k, e) in es.iter().enumerate() {
        let ctx = format!("edges[{k}]");
        let ij = e.as_array().ok_or_else(|| perr(&ctx, "expected [i, j]"))?;
        if ij.len() != 2 {
            return Err(perr(&ctx, "expected [i, j]"));
        }
        let i = parse_index(&ij[0], &format!("{ctx}[0]"))?;
        let j = parse_index(&ij[1], &format!("{ctx}[1]"))?;
        if i >= vertices.len() || j >= vertices.len() {
            return Err(Error::InvalidDrawing(format!("{ctx}: vertex index out of range")));
        }
        if i == j {
            return Err(Error::InvalidDrawing(format!("{ctx}: self-loop on vertex {i}")));
        }
        if i > j {
            rep.normalized.push(format!("{ctx}: reoriented to [{j}, {i}]"));
        }
        edges.push((i, j));
    }

    let mut meta = BTreeMap::new();
    if let Some(m) = obj.get("meta") {
        let m = m.as_object().ok_or_else(|| perr("meta", "expected an object"))?;
        for (key, val) in m {
            let s = val.as_str().ok_or_else(|| perr(format!("meta.{key}"), "expected a string"))?;
            meta.insert(key.clone(), s.to_string());
        }
    }

    let raw = Drawing::from_raw(vertices.clone(), edges.clone(), meta.clone());
    let dashed = raw.dashed_pairs();
    let mut d = Drawing::new(vertices, edges.clone());
    *d.meta_mut() = meta;
    if !dashed.is_empty() {
        let oriented: Vec<Edge> = dashed.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
        let before = d.meta().get(super::META_DASHED).cloned();
        d.mark_dashed(&oriented);
        if d.meta().get(super::META_DASHED) != before.as_ref() {
            rep.normalized.push("meta.dashed: indices remapped to sorted edge order".into());
        }
    }
    let oriented: Vec<Edge> = edges.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
    if oriented.windows(2).any(|w| w[0] > w[1]) {
        rep.normalized.push("edges: sorted lexicographically".into());
    }

    let mut sorted = d.edges().to_vec();
    sorted.dedup();
    if sorted.len() != d.e() {
        return Err(Error::InvalidDrawing("duplicate edges".into()));
    }
    let mut pts: Vec<&Point> = d.vertices().iter().collect();
    pts.sort();
    if pts.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidDrawing("coincident vertices".into()));
    }
    Ok((d, rep))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_denominator_is_parse_error() {
        let text = r#"{"format":"udg-drawing/1","field":"Q(sqrt3)",
            "vertices":[[["0","0","0","1"],["0","1","0","1"]]],"edges":[],"meta":{}}"#;
        match from_str(text) {
            Err(Error::Parse { context, .. }) => assert_eq!(context, "vertices[0][0][1]"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unreduced_fraction_is_normalized_and_flagged() {
        let text = r#"{"format":"udg-drawing/1","field":"Q(sqrt3)",
            "vertices":[[["2","4","0","1"],["0","1","0","1"]],[["-1","2","0","1"],["0","1","0","1"]]],
            "edges":[[1,0]],"meta":{}}"#;
        let (d, rep) = from_str(text).unwrap();
        assert_eq!(d.vertices()[0].x, QField::ratio(1, 2));
        assert_eq!(d.edges(), &[(0, 1)]);
        assert!(rep.normalized.iter().any(|s| s.contains("vertices[0][0]")));
        assert!(rep.normalized.iter().any(|s| s.contains("reoriented")));
    }

    #[test]
    fn structural_violations_rejected() {
        let dup = r#"{"format":"udg-drawing/1","field":"Q(sqrt3)",
            "vertices":[[["0","1","0","1"],["0","1","0","1"]],[["1","1","0","1"],["0","1","0","1"]]],
            "edges":[[0,1],[1,0]],"meta":{}}"#;
        assert!(matches!(from_str(dup), Err(Error::InvalidDrawing(_))));
        let bad = r#"{"format":"udg-drawing/2","field":"Q(sqrt3)","vertices":[],"edges":[]}"#;
        assert!(matches!(from_str(bad), Err(Error::Parse { .. })));
        assert!(matches!(from_str("{not json"), Err(Error::Parse { .. })));
    }
}
