//! The bundled example corpus: small, auditable cases with pinned expected
//! values. Each line of `data/corpus.jsonl` is one case; the `provenance`
//! field records whether the numbers come from a worked source example
//! (`paper`), an independent hand computation (`derived`), or are immediate
//! (`trivial`).

use crate::{cli, Error, Result};
use serde_json::Value;

const DATA: &str = include_str!("../data/corpus.jsonl");

#[derive(Debug, Clone)]
pub struct Case {
    pub id: String,
    pub provenance: String,
    pub op: String,
    pub args: Value,
    pub expected: Value,
}

pub fn cases() -> Result<Vec<Case>> {
    let mut out = Vec::new();
    for (lineno, line) in DATA.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v: Value = serde_json::from_str(line)
            .map_err(|e| Error::Input(format!("corpus line {}: {e}", lineno + 1)))?;
        let field = |k: &str| -> Result<String> {
            v.get(k)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| Error::Input(format!("corpus line {}: missing `{k}`", lineno + 1)))
        };
        out.push(Case {
            id: field("id")?,
            provenance: field("provenance")?,
            op: field("op")?,
            args: v.get("args").cloned().unwrap_or(Value::Null),
            expected: v
                .get("expected")
                .cloned()
                .ok_or_else(|| Error::Input(format!("corpus line {}: missing `expected`", lineno + 1)))?,
        });
    }
    Ok(out)
}

/// Structural containment: every key/element spelled out in `expected` must
/// appear with the same value in `actual`; actual may carry extra keys.
/// Arrays must match element-by-element at full length.
pub fn value_matches(expected: &Value, actual: &Value) -> bool {
    match (expected, actual) {
        (Value::Object(e), Value::Object(a)) => e
            .iter()
            .all(|(k, v)| a.get(k).is_some_and(|av| value_matches(v, av))),
        (Value::Array(e), Value::Array(a)) => {
            e.len() == a.len() && e.iter().zip(a).all(|(x, y)| value_matches(x, y))
        }
        _ => expected == actual,
    }
}

pub fn run_corpus(filter: Option<&str>) -> Result<Value> {
    let selected: Vec<Case> = cases()?
        .into_iter()
        .filter(|c| filter.is_none_or(|f| c.id.contains(f)))
        .collect();
    if selected.is_empty() {
        return Err(Error::Input(format!(
            "no corpus case matches filter `{}`",
            filter.unwrap_or("")
        )));
    }
    let mut passed = 0usize;
    let mut failures = Vec::new();
    for case in &selected {
        match cli::eval_op(&case.op, &case.args) {
            Ok(actual) if value_matches(&case.expected, &actual) => passed += 1,
            Ok(actual) => failures.push(serde_json::json!({
                "id": case.id,
                "expected": case.expected,
                "actual": actual,
            })),
            Err(err) => failures.push(serde_json::json!({
                "id": case.id,
                "expected": case.expected,
                "error": err.to_string(),
            })),
        }
    }
    Ok(serde_json::json!({
        "total": selected.len(),
        "passed": passed,
        "failed": failures.len(),
        "failures": failures,
    }))
}
