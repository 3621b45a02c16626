//! The envelope every command emits.
//!
//! Keys appear in a fixed order and big orders are decimal strings, so the
//! same command on the same input always prints the same bytes. Elapsed time
//! is only included on request.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::designs::Hypergraph;

pub const SCHEMA_VERSION: u32 = 1;

/// How a command ended; maps onto the process exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    VerificationFailed,
    BudgetExceeded,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::BudgetExceeded => 3,
        }
    }

    /// The worse of two outcomes; a failed check outranks a skipped one.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::VerificationFailed, _) | (_, Status::VerificationFailed) => {
                Status::VerificationFailed
            }
            (Status::BudgetExceeded, _) | (_, Status::BudgetExceeded) => Status::BudgetExceeded,
            _ => Status::Ok,
        }
    }
}

/// A design that went into a command, identified by label and content hash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputRef {
    pub label: String,
    /// SHA-256 of the canonical design JSON.
    pub sha256: String,
}

impl InputRef {
    pub fn design(h: &Hypergraph) -> Self {
        InputRef {
            label: h.label().to_string(),
            sha256: sha256_hex(h.to_json().as_bytes()),
        }
    }

    /// An input with no design behind it, such as a fixed construction.
    pub fn named(label: &str) -> Self {
        InputRef {
            label: label.to_string(),
            sha256: sha256_hex(label.as_bytes()),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Versions {
    pub conway_core: &'static str,
    pub schema: u32,
}

impl Default for Versions {
    fn default() -> Self {
        Versions {
            conway_core: env!("CARGO_PKG_VERSION"),
            schema: SCHEMA_VERSION,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: Vec<String>,
    pub status: Status,
    pub inputs: Vec<InputRef>,
    pub results: Value,
    pub versions: Versions,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: Vec<String>, inputs: Vec<InputRef>, results: Value, status: Status) -> Self {
        Report {
            command,
            status,
            inputs,
            results,
            versions: Versions::default(),
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// `key: value` lines, nested keys joined with dots and array items indexed.
    pub fn to_text(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut lines = Vec::new();
        flatten("", &value, &mut lines);
        lines.join("\n")
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Flattens `v` into `path: value` lines. Arrays of scalars stay on one line.
pub fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) if !map.is_empty() => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, child) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), child, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{prefix}: [{}]", parts.join(", ")));
        }
        other => out.push(format!("{prefix}: {}", scalar(other))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::families;
    use serde_json::json;

    #[test]
    fn keys_keep_their_order() {
        let r = Report::new(
            vec!["catalog".into(), "list".into()],
            vec![],
            json!({"b": 1, "a": [1, 2]}),
            Status::Ok,
        );
        let text = r.to_json();
        let positions: Vec<usize> = ["\"command\"", "\"status\"", "\"inputs\"", "\"results\"", "\"versions\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
        assert!(text.find("\"b\"").unwrap() < text.find("\"a\"").unwrap());
        assert!(!text.contains("elapsed_ms"));
    }

    #[test]
    fn flattened_text() {
        let r = Report::new(
            vec!["x".into()],
            vec![InputRef::named("golay")],
            json!({"order": "95040", "orbits": [12, 12], "nested": [{"ok": true}]}),
            Status::Ok,
        );
        let text = r.to_text();
        assert!(text.contains("results.order: 95040"));
        assert!(text.contains("results.orbits: [12, 12]"));
        assert!(text.contains("results.nested.0.ok: true"));
        assert!(text.contains("inputs.0.label: golay"));
    }

    #[test]
    fn design_hash_is_stable() {
        let a = InputRef::design(&families::pg23());
        let b = InputRef::design(&families::pg23());
        assert_eq!(a, b);
        assert_eq!(a.sha256.len(), 64);
        assert_ne!(a.sha256, InputRef::design(&families::ag24()).sha256);
    }

    #[test]
    fn status_precedence() {
        use Status::*;
        assert_eq!(Ok.combine(BudgetExceeded), BudgetExceeded);
        assert_eq!(BudgetExceeded.combine(VerificationFailed), VerificationFailed);
        assert_eq!(Ok.combine(Ok).exit_code(), 0);
    }
}
