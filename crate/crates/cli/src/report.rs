//! JSON and text rendering of curve reports.
//!
//! JSON objects use `serde_json`'s default ordered map, so keys come out
//! sorted and output is byte-stable. The text format is a flat listing of
//! `path = value` lines, with arrays of flat records drawn as aligned tables;
//! [`parse_text`] reads it back into the same JSON value.

use std::fmt::Write as _;

use raocurve::cohomology::HilbertTable;
use raocurve::verify::CurveReport;
use raocurve::{BettiTable, MonomialIdeal};
use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

pub fn betti_json(b: &BettiTable) -> Value {
    Value::Array(b.entries().map(|(i, j, r)| json!({"i": i, "j": j, "rank": r})).collect())
}

pub fn monomials_json(m: &MonomialIdeal) -> Value {
    Value::Array(m.generators().iter().map(|g| Value::String(g.to_string())).collect())
}

fn hilbert_json(h: &HilbertTable) -> Value {
    json!({
        "window": [h.window.0, h.window.1],
        "degree": h.degree,
        "genus": h.genus,
        "regularity": h.regularity,
        "numerator": h.numerator,
    })
}

/// Report body without the `schema` and `seed` keys.
pub fn report_body(r: &CurveReport) -> Value {
    let (lo, _) = r.window;
    let table: Vec<Value> = (0..r.h1.len())
        .map(|k| {
            json!({
                "j": lo + k as i64,
                "hf": r.hilbert.dims[k],
                "h1": r.h1[k],
                "rho": r.rho[k],
                "h1_match": r.h1_match[k],
                "h2": r.h2[k],
                "mu": r.mu[k],
            })
        })
        .collect();
    let gin = r.gin.as_ref().map(|g| {
        json!({
            "monomials": monomials_json(&g.ideal),
            "seeds": g.seeds,
            "expected": g.expected.iter().map(monomials_json).collect::<Vec<_>>(),
            "match": g.matches,
        })
    });
    let b = &r.betti;
    let betti = json!({
        "computed": betti_json(&b.computed),
        "expected": b.expected.as_ref().map(betti_json),
        "match": b.matches_expected,
        "gin": b.gin.as_ref().map(betti_json),
        "match_gin": b.matches_gin,
    });
    let rao = &r.rao;
    let rao = json!({
        "dims": rao.dims,
        "support": rao.support.map(|(a, b)| vec![a, b]),
        "expected_dims": rao.expected_dims,
        "generator_count": rao.generator_count,
        "expected_generator_count": rao.expected_generator_count,
        "annihilator_degrees": rao.annihilator_degrees,
        "expected_annihilator_degrees": rao.expected_annihilator_degrees,
        "match": rao.matches,
    });
    let section = r.section.as_ref().map(|s| {
        json!({
            "seed": s.seed,
            "form": s.form,
            "hilbert": s.hilbert,
            "expected": s.expected,
            "match": s.matches,
        })
    });
    json!({
        "spec": {"n": r.spec.n, "d": r.spec.d, "g": r.spec.g, "a": r.a},
        "hilbert": hilbert_json(&r.hilbert),
        "cohomology": table,
        "first_h1_failure": r.first_h1_failure,
        "h2_match": r.h2_match,
        "gin": gin,
        "betti": betti,
        "rao": rao,
        "section": section,
        "verdict": r.verdict.as_str(),
        "violations": r.violations,
        "warnings": r.warnings,
    })
}

/// Top-level document for a single analysis.
pub fn report_json(r: &CurveReport, seed: u64) -> Value {
    let mut v = report_body(r);
    let m = v.as_object_mut().unwrap();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("seed".into(), json!(seed));
    v
}

pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap();
    s.push('\n');
    s
}

/// Is `v` a nonempty array of objects with identical keys and scalar values?
fn is_record_table(v: &[Value]) -> bool {
    let Some(Value::Object(first)) = v.first() else { return false };
    v.iter().all(|row| match row {
        Value::Object(m) => {
            m.len() == first.len()
                && m.keys().zip(first.keys()).all(|(a, b)| a == b)
                && m.values().all(|x| match x {
                    Value::String(s) => !s.is_empty() && !s.contains(char::is_whitespace),
                    Value::Array(_) | Value::Object(_) => false,
                    _ => true,
                })
        }
        _ => false,
    })
}

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(&mut out, "", v);
    out
}

fn write_text(out: &mut String, path: &str, v: &Value) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) if !m.is_empty() => {
            for (k, x) in m {
                write_text(out, &join(k), x);
            }
        }
        Value::Array(a) if is_record_table(a) => {
            let keys: Vec<&String> = a[0].as_object().unwrap().keys().collect();
            let cells: Vec<Vec<String>> = a
                .iter()
                .map(|row| keys.iter().map(|k| row[k.as_str()].to_string()).collect())
                .collect();
            let widths: Vec<usize> = keys
                .iter()
                .enumerate()
                .map(|(c, k)| cells.iter().map(|r| r[c].len()).chain([k.len()]).max().unwrap())
                .collect();
            writeln!(out, "{path}:").unwrap();
            let line = |row: Vec<&str>| {
                let mut s = String::from(" ");
                for (c, x) in row.iter().enumerate() {
                    write!(s, " {:>w$}", x, w = widths[c]).unwrap();
                }
                s
            };
            writeln!(out, "{}", line(keys.iter().map(|k| k.as_str()).collect())).unwrap();
            for r in &cells {
                writeln!(out, "{}", line(r.iter().map(|s| s.as_str()).collect())).unwrap();
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_array() || x.is_object()) => {
            for (k, x) in a.iter().enumerate() {
                write_text(out, &join(&k.to_string()), x);
            }
            writeln!(out, "{path}.len = {}", a.len()).unwrap();
        }
        _ => writeln!(out, "{path} = {v}").unwrap(),
    }
}

/// Inverse of [`to_text`].
pub fn parse_text(s: &str) -> Result<Value, String> {
    let mut root = Value::Object(Map::new());
    let mut lines = s.lines().peekable();
    while let Some(line) = lines.next() {
        if let Some((path, val)) = line.split_once(" = ") {
            let val: Value = serde_json::from_str(val).map_err(|e| format!("{line}: {e}"))?;
            if let Some(p) = path.strip_suffix(".len") {
                let n = val.as_u64().ok_or("bad length")? as usize;
                let slot = slot(&mut root, p);
                if slot.is_null() {
                    *slot = Value::Array(Vec::new());
                }
                let arr = slot.as_array_mut().ok_or("length on a non-array")?;
                arr.resize(n, Value::Null);
                continue;
            }
            *slot(&mut root, path) = val;
        } else if let Some(path) = line.strip_suffix(':') {
            let header: Vec<String> =
                lines.next().ok_or("missing table header")?.split_whitespace().map(String::from).collect();
            let mut rows = Vec::new();
            while let Some(l) = lines.peek() {
                if !l.starts_with("  ") {
                    break;
                }
                let mut row = Map::new();
                for (k, cell) in header.iter().zip(l.split_whitespace()) {
                    row.insert(k.clone(), serde_json::from_str(cell).map_err(|e| format!("{l}: {e}"))?);
                }
                rows.push(Value::Object(row));
                lines.next();
            }
            *slot(&mut root, path) = Value::Array(rows);
        } else {
            return Err(format!("unreadable line `{line}`"));
        }
    }
    Ok(root)
}

fn slot<'a>(root: &'a mut Value, path: &str) -> &'a mut Value {
    let mut cur = root;
    for part in path.split('.') {
        if let Ok(k) = part.parse::<usize>() {
            if cur.is_null() {
                *cur = Value::Array(Vec::new());
            }
            let a = cur.as_array_mut().unwrap();
            if a.len() <= k {
                a.resize(k + 1, Value::Null);
            }
            cur = &mut a[k];
        } else {
            if cur.is_null() {
                *cur = Value::Object(Map::new());
            }
            cur = cur.as_object_mut().unwrap().entry(part.to_string()).or_insert(Value::Null);
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let v = json!({
            "schema": 1,
            "a": {"b": [1, 2, 3], "c": null, "e": {}},
            "rows": [{"i": 0, "j": 4, "rank": 1}, {"i": 1, "j": 10, "rank": 22}],
            "nested": [["x0^2", "x1"], []],
            "empty": [],
            "s": "not extremal: h1(2) = 1",
        });
        let t = to_text(&v);
        assert_eq!(parse_text(&t).unwrap(), v, "{t}");
    }
}
