//! Reading `.lca` files and command-line values, including `@file` JSON.

use std::collections::BTreeMap;

use serde_json::Value;
use vxa_core::dsl::{self, Lowered};
use vxa_core::enveloping::{Enveloping, UElement};
use vxa_core::lca::{ConformalVector, LcaPresentation};
use vxa_core::scalar::parse_q;
use vxa_core::{Error, Result};

pub fn load(path: &str) -> Result<Lowered> {
    let src = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    dsl::load_algebra(&src).map_err(|e| match e {
        Error::Parse(ds) => Error::InvalidInput(ds.iter().map(|d| format!("{path}:{d}")).collect::<Vec<_>>().join("\n")),
        other => other,
    })
}

fn json_file(arg: &str) -> Result<Option<Value>> {
    let Some(path) = arg.strip_prefix('@') else {
        return Ok(None);
    };
    let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map(Some).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

/// `{"coords": {"a[0]": "3/2"}}` turned back into the point mini-grammar.
fn coords_text(v: &Value) -> Result<String> {
    let coords = v
        .get("coords")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::InvalidInput("expected {\"coords\": {...}}".into()))?;
    let mut parts = Vec::new();
    for (k, c) in coords {
        let c = match c {
            Value::String(s) => s.clone(),
            Value::Number(n) if n.is_i64() => n.to_string(),
            _ => return Err(Error::InvalidInput(format!("coordinate {k} must be a rational string"))),
        };
        parts.push(format!("{k}={c}"));
    }
    Ok(parts.join(", "))
}

pub fn point(arg: &str, p: &LcaPresentation) -> Result<ConformalVector> {
    match json_file(arg)? {
        Some(v) => dsl::parse_point(&coords_text(&v)?, p),
        None => dsl::parse_point(arg, p),
    }
}

pub fn vector(arg: &str, p: &LcaPresentation) -> Result<ConformalVector> {
    match json_file(arg)? {
        Some(v) => dsl::parse_point(&coords_text(&v)?, p),
        None => dsl::parse_vector(arg, p),
    }
}

/// PBW text, or `{"terms": [{"coeff": "2", "letters": ["a[0]", "a[1]"]}]}`.
pub fn pbw(arg: &str, env: &Enveloping) -> Result<UElement> {
    let Some(v) = json_file(arg)? else {
        return dsl::parse_pbw(arg, env);
    };
    let bad = || Error::InvalidInput("expected {\"terms\": [{\"coeff\": ..., \"letters\": [...]}]}".into());
    let mut out = UElement::zero();
    for t in v.get("terms").and_then(Value::as_array).ok_or_else(bad)? {
        let c = match t.get("coeff") {
            Some(Value::String(s)) => parse_q(s).ok_or_else(bad)?,
            Some(Value::Number(n)) if n.is_i64() => parse_q(&n.to_string()).ok_or_else(bad)?,
            None => parse_q("1").unwrap(),
            _ => return Err(bad()),
        };
        let mut letters = Vec::new();
        for l in t.get("letters").and_then(Value::as_array).ok_or_else(bad)? {
            let name = l.as_str().ok_or_else(bad)?;
            letters.push(env.frame().parse_letter(name).ok_or_else(|| Error::InvalidInput(format!("unknown letter `{name}`")))?);
        }
        out.add_scaled(&env.straighten(&letters), &c);
    }
    Ok(out)
}

/// `A..B` with `A <= B`.
pub fn window(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected A..B, got `{s}`"))?;
    let a: i64 = a.trim().parse().map_err(|_| format!("bad window start `{a}`"))?;
    let b: i64 = b.trim().parse().map_err(|_| format!("bad window end `{b}`"))?;
    if a > b {
        return Err(format!("empty window {a}..{b}"));
    }
    Ok((a, b))
}

/// Point coordinates as a JSON object keyed `g[d]`.
pub fn coords_json(p: &LcaPresentation, v: &ConformalVector) -> Value {
    let map: BTreeMap<String, Value> = v
        .iter()
        .map(|(idx, c)| (format!("{}[{}]", p.generators()[idx.gen as usize].name, idx.depth), Value::String(vxa_core::scalar::fmt_q(c))))
        .collect();
    serde_json::json!({ "coords": map })
}
