//! JSON tree documents.
//!
//! ```json
//! {"kind": "NP", "lang": "en", "children": [
//!   {"kind": "D", "lemma": "the"}, {"kind": "N", "lemma": "cat", "options": {"n": "p"}}]}
//! ```
//!
//! Lemma-carrying terminals use `lemma`; `NO`, `DT` and `Q` use `value`
//! (integer, ISO date-time, text). `lang` is required at the root and
//! inherited below it.

use chrono::{NaiveDate, NaiveDateTime};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::features::Language;
use crate::syntax::{Constituent, NodeKind, TerminalKind, TerminalValue};

const DATE_FORMAT: &str = "%Y-%m-%dT%H:%M:%S%.f";

#[derive(Debug, Error, PartialEq)]
pub enum InterchangeError {
    #[error("malformed document at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Schema { path: String, message: String },
}

impl InterchangeError {
    /// Path of the offending key for schema errors.
    pub fn path(&self) -> Option<&str> {
        match self {
            InterchangeError::Schema { path, .. } => Some(path),
            InterchangeError::Parse { .. } => None,
        }
    }
}

fn schema(path: &str, message: impl Into<String>) -> InterchangeError {
    InterchangeError::Schema {
        path: path.to_string(),
        message: message.into(),
    }
}

pub fn parse_tree(bytes: &[u8]) -> Result<Constituent, InterchangeError> {
    let value: Value = serde_json::from_slice(bytes).map_err(|e| InterchangeError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    tree_from_value(&value)
}

pub fn tree_from_value(value: &Value) -> Result<Constituent, InterchangeError> {
    node(value, "$", None)
}

fn node(value: &Value, path: &str, inherited: Option<Language>) -> Result<Constituent, InterchangeError> {
    let obj = value
        .as_object()
        .ok_or_else(|| schema(path, "expected an object"))?;
    if let Some(key) = obj
        .keys()
        .find(|k| !["kind", "lemma", "value", "lang", "options", "children"].contains(&k.as_str()))
    {
        return Err(schema(&format!("{path}.{key}"), "unknown key"));
    }

    let kind_path = format!("{path}.kind");
    let kind: NodeKind = obj
        .get("kind")
        .ok_or_else(|| schema(&kind_path, "missing"))?
        .as_str()
        .ok_or_else(|| schema(&kind_path, "expected a string"))?
        .parse()
        .map_err(|e: crate::syntax::SyntaxError| schema(&kind_path, e.to_string()))?;

    let lang_path = format!("{path}.lang");
    let lang = match obj.get("lang") {
        Some(v) => v
            .as_str()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| schema(&lang_path, "expected \"en\" or \"fr\""))?,
        None => inherited.ok_or_else(|| schema(&lang_path, "missing at the root"))?,
    };

    let mut c = match kind {
        NodeKind::Terminal(k) => {
            if obj.contains_key("children") {
                return Err(schema(&format!("{path}.children"), "terminals have no children"));
            }
            let value = terminal_value(obj, k, path)?;
            Constituent::terminal(k, value, lang).map_err(|e| schema(path, e.to_string()))?
        }
        NodeKind::Phrase(k) => {
            for key in ["lemma", "value"] {
                if obj.contains_key(key) {
                    return Err(schema(&format!("{path}.{key}"), "phrases carry no value"));
                }
            }
            let children = match obj.get("children") {
                None => Vec::new(),
                Some(Value::Array(items)) => items
                    .iter()
                    .enumerate()
                    .map(|(i, v)| node(v, &format!("{path}.children[{i}]"), Some(lang)))
                    .collect::<Result<_, _>>()?,
                Some(_) => return Err(schema(&format!("{path}.children"), "expected an array")),
            };
            Constituent::phrase(k, children, lang)
        }
    };

    match obj.get("options") {
        None => {}
        Some(Value::Object(opts)) => {
            for (key, v) in opts {
                c.set_option(key, v)
                    .map_err(|e| schema(&format!("{path}.options.{key}"), e.to_string()))?;
            }
        }
        Some(_) => return Err(schema(&format!("{path}.options"), "expected an object")),
    }
    Ok(c)
}

fn terminal_value(
    obj: &Map<String, Value>,
    kind: TerminalKind,
    path: &str,
) -> Result<TerminalValue, InterchangeError> {
    let (key, other) = if kind.pos().is_some() {
        ("lemma", "value")
    } else {
        ("value", "lemma")
    };
    if obj.contains_key(other) {
        return Err(schema(
            &format!("{path}.{other}"),
            format!("{} takes \"{key}\"", kind.code()),
        ));
    }
    let p = format!("{path}.{key}");
    let v = obj.get(key).ok_or_else(|| schema(&p, "missing"))?;
    match kind {
        TerminalKind::NO => v
            .as_i64()
            .map(TerminalValue::Number)
            .ok_or_else(|| schema(&p, "expected an integer")),
        TerminalKind::DT => v
            .as_str()
            .and_then(parse_date)
            .map(TerminalValue::Date)
            .ok_or_else(|| schema(&p, "expected an ISO date-time")),
        TerminalKind::Q => v
            .as_str()
            .map(|s| TerminalValue::Text(s.to_string()))
            .ok_or_else(|| schema(&p, "expected a string")),
        _ => match v.as_str() {
            Some(s) if !s.is_empty() => Ok(TerminalValue::Lemma(s.to_string())),
            _ => Err(schema(&p, "expected a non-empty string")),
        },
    }
}

fn parse_date(s: &str) -> Option<NaiveDateTime> {
    s.parse::<NaiveDateTime>()
        .ok()
        .or_else(|| s.parse::<NaiveDate>().ok().and_then(|d| d.and_hms_opt(0, 0, 0)))
}

/// Canonical compact document: sorted keys, defaults and inherited
/// languages omitted.
pub fn serialize_tree(c: &Constituent) -> String {
    tree_to_value(c).to_string()
}

pub fn tree_to_value(c: &Constituent) -> Value {
    to_value(c, None)
}

fn to_value(c: &Constituent, parent: Option<Language>) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), c.kind().code().into());
    if parent != Some(c.lang()) {
        m.insert("lang".into(), c.lang().code().into());
    }
    match c.value() {
        Some(TerminalValue::Lemma(s)) => {
            m.insert("lemma".into(), s.clone().into());
        }
        Some(TerminalValue::Number(n)) => {
            m.insert("value".into(), (*n).into());
        }
        Some(TerminalValue::Date(d)) => {
            m.insert("value".into(), d.format(DATE_FORMAT).to_string().into());
        }
        Some(TerminalValue::Text(s)) => {
            m.insert("value".into(), s.clone().into());
        }
        None => {}
    }
    let opts = c.options().to_json();
    if !opts.is_empty() {
        m.insert("options".into(), Value::Object(opts));
    }
    if !c.children().is_empty() {
        let kids = c.children().iter().map(|k| to_value(k, Some(c.lang()))).collect();
        m.insert("children".into(), Value::Array(kids));
    }
    Value::Object(m)
}
