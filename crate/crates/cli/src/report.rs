//! Reports, checks and run manifests.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const SCHEMA_VERSION: u32 = 1;

/// A computed value compared against its expectation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub actual: Value,
    pub pass: bool,
}

impl Check {
    pub fn eq<T: Serialize + PartialEq>(name: impl Into<String>, expected: T, actual: T) -> Self {
        let pass = expected == actual;
        Check { name: name.into(), expected: json!(expected), actual: json!(actual), pass }
    }

    /// A property that should hold.
    pub fn holds(name: impl Into<String>, actual: bool) -> Self {
        Check::eq(name, true, actual)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheDigest {
    pub label: String,
    pub sha256: String,
    pub hit: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub version: String,
    pub group_cache: Vec<CacheDigest>,
    pub duration_ms: u64,
    pub threads: usize,
    /// SHA-256 of the command, parameters, version, checks and data.
    pub result_digest: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub data: Value,
    pub manifest: RunManifest,
}

/// What a command computes, before it is wrapped into a [`Report`].
#[derive(Clone, Debug, Default)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub data: Value,
}

impl Outcome {
    pub fn new(data: Value) -> Self {
        Outcome { checks: Vec::new(), data }
    }

    pub fn check(&mut self, c: Check) {
        self.checks.push(c);
    }
}

pub fn result_digest(command: &str, parameters: &BTreeMap<String, Value>, version: &str, checks: &[Check], data: &Value) -> String {
    let canonical = json!({
        "command": command,
        "parameters": parameters,
        "version": version,
        "checks": checks,
        "data": data,
    });
    hex(&Sha256::digest(canonical.to_string().as_bytes()))
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::with_capacity(bytes.len() * 2), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl Report {
    pub fn build(
        command: &str,
        parameters: BTreeMap<String, Value>,
        outcome: Outcome,
        group_cache: Vec<CacheDigest>,
        duration_ms: u64,
        threads: usize,
    ) -> Self {
        let version = env!("CARGO_PKG_VERSION").to_string();
        let result_digest = result_digest(command, &parameters, &version, &outcome.checks, &outcome.data);
        let status = if outcome.checks.iter().all(|c| c.pass) { Status::Match } else { Status::Mismatch };
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            status,
            checks: outcome.checks,
            data: outcome.data,
            manifest: RunManifest {
                command: command.to_string(),
                parameters,
                version,
                group_cache,
                duration_ms,
                threads,
                result_digest,
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One `path = value` line per leaf of the JSON form, after a summary of
    /// the checks.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let status = match self.status {
            Status::Match => "MATCH",
            Status::Mismatch => "MISMATCH",
        };
        let _ = writeln!(out, "artin-epi {}: {status}", self.command);
        for c in &self.checks {
            let mark = if c.pass { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{mark} {}: {} (expected {})", c.name, c.actual, c.expected);
        }
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut lines = Vec::new();
        flatten("", &value, &mut lines);
        for (path, v) in lines {
            let _ = writeln!(out, "{path} = {v}");
        }
        out
    }
}

/// Leaves of a JSON value as `(path, rendered value)`, depth first.
pub fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    match value {
        Value::Object(map) => {
            if map.is_empty() {
                out.push((prefix.to_string(), "{}".into()));
            }
            for (k, v) in map {
                let path = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&path, v, out);
            }
        }
        Value::Array(items) => {
            if items.is_empty() {
                out.push((prefix.to_string(), "[]".into()));
            }
            for (i, v) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), v, out);
            }
        }
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample(duration_ms: u64) -> Report {
        let mut o = Outcome::new(json!({"counts": [17, 53], "label": "F4"}));
        o.check(Check::eq("pairs", 53, 53));
        Report::build("census", BTreeMap::from([("case".into(), json!("f4"))]), o, Vec::new(), duration_ms, 4)
    }

    #[test]
    fn digest_ignores_timing() {
        assert_eq!(sample(3).manifest.result_digest, sample(900).manifest.result_digest);
        assert_eq!(sample(3).status, Status::Match);
    }

    #[test]
    fn text_lists_every_leaf() {
        let text = sample(1).to_text();
        assert!(text.contains("data.counts[1] = 53"));
        assert!(text.contains("manifest.threads = 4"));
        assert!(text.starts_with("artin-epi census: MATCH"));
    }

    #[test]
    fn failed_check_is_a_mismatch() {
        let mut o = Outcome::new(json!({}));
        o.check(Check::eq("x", 8, 7));
        let r = Report::build("census", BTreeMap::new(), o, Vec::new(), 0, 1);
        assert_eq!(r.status, Status::Mismatch);
        assert!(r.to_text().contains("FAIL x: 7 (expected 8)"));
    }
}
