//! Machine-readable verification records.
//!
//! A report is a flat list of [`Entry`] values plus a summary. Entries carry
//! no wall-clock data unless timings are explicitly requested, so two runs
//! with the same configuration serialize to identical bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_NAME: &str = "speyer";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub suite: String,
    pub claim: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    /// Experimental entries record findings and never fail a run.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub experimental: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl Entry {
    pub fn new(suite: &str, claim: &str) -> Self {
        Entry {
            suite: suite.to_string(),
            claim: claim.to_string(),
            params: BTreeMap::new(),
            pass: false,
            experimental: false,
            witness: None,
            elapsed_ms: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn pass(mut self, pass: bool) -> Self {
        self.pass = pass;
        self
    }

    pub fn experimental(mut self) -> Self {
        self.experimental = true;
        self
    }

    pub fn witness(mut self, w: Option<String>) -> Self {
        self.witness = w;
        self
    }

    /// Identity of an entry across runs: claim plus parameters.
    pub fn key(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}[{}]", self.claim, params.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub experimental: usize,
    pub experimental_holding: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub tool: String,
    pub version: String,
    pub config: serde_json::Value,
    pub entries: Vec<Entry>,
    pub summary: Summary,
}

impl Default for VerificationReport {
    fn default() -> Self {
        Self::new(serde_json::Value::Null)
    }
}

impl VerificationReport {
    pub fn new(config: serde_json::Value) -> Self {
        VerificationReport {
            schema: SCHEMA_VERSION,
            tool: TOOL_NAME.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            entries: Vec::new(),
            summary: Summary::default(),
        }
    }

    pub fn push(&mut self, e: Entry) {
        self.entries.push(e);
        self.resummarize();
    }

    pub fn extend(&mut self, es: impl IntoIterator<Item = Entry>) {
        self.entries.extend(es);
        self.resummarize();
    }

    fn resummarize(&mut self) {
        let mut s = Summary::default();
        for e in &self.entries {
            s.total += 1;
            if e.experimental {
                s.experimental += 1;
                s.experimental_holding += usize::from(e.pass);
            } else if e.pass {
                s.passed += 1;
            } else {
                s.failed += 1;
            }
        }
        self.summary = s;
    }

    /// True iff every non-experimental entry passed.
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.experimental || e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| !e.experimental && !e.pass)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,claim,params,pass,experimental,witness\n");
        for e in &self.entries {
            let params: Vec<String> = e.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let _ = writeln!(
                out,
                "{},{},{},{},{},{}",
                csv_field(&e.suite),
                csv_field(&e.claim),
                csv_field(&params.join(";")),
                e.pass,
                e.experimental,
                csv_field(e.witness.as_deref().unwrap_or(""))
            );
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let status = match (e.experimental, e.pass) {
                (true, true) => "HOLDS",
                (true, false) => "FINDING",
                (false, true) => "PASS",
                (false, false) => "FAIL",
            };
            let _ = write!(out, "{status:<8} {}", e.key());
            if let Some(w) = &e.witness {
                let _ = write!(out, "  witness={w}");
            }
            out.push('\n');
        }
        let s = &self.summary;
        let _ = writeln!(
            out,
            "total={} passed={} failed={} experimental={} (holding {})",
            s.total, s.passed, s.failed, s.experimental, s.experimental_holding
        );
        out
    }
}

/// Quotes a field when it contains a separator, quote or newline.
fn csv_field(s: &str) -> std::borrow::Cow<'_, str> {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\"")).into()
    } else {
        s.into()
    }
}

/// One entry whose status differs between two reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatusChange {
    pub key: String,
    pub before: Option<bool>,
    pub after: Option<bool>,
}

/// Entries whose pass/hold status changed, appeared or disappeared.
/// Version, config and timings are ignored.
pub fn diff(a: &VerificationReport, b: &VerificationReport) -> Vec<StatusChange> {
    let index = |r: &VerificationReport| -> BTreeMap<String, bool> {
        r.entries.iter().map(|e| (e.key(), e.pass)).collect()
    };
    let (ia, ib) = (index(a), index(b));
    let mut keys: Vec<&String> = ia.keys().chain(ib.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let (before, after) = (ia.get(k).copied(), ib.get(k).copied());
            (before != after).then(|| StatusChange {
                key: k.clone(),
                before,
                after,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        let mut r = VerificationReport::default();
        r.push(Entry::new("realroots", "real-rooted").param("n", 4).param("t", "1/2").pass(true));
        r.push(Entry::new("conjecture", "generalized-laguerre").param("n", 4).pass(false).experimental());
        r
    }

    #[test]
    fn csv_quotes_fields_with_commas() {
        let mut r = VerificationReport::default();
        r.push(Entry::new("logconcavity", "k-log-concave").param("n", 5).witness(Some("depth=1,index=2".into())));
        let csv = r.to_csv();
        assert_eq!(csv.lines().nth(1), Some("logconcavity,k-log-concave,n=5,false,false,\"depth=1,index=2\""));
    }

    #[test]
    fn summary_separates_experimental() {
        let r = sample();
        assert_eq!(r.summary.total, 2);
        assert_eq!(r.summary.passed, 1);
        assert_eq!(r.summary.failed, 0);
        assert_eq!(r.summary.experimental, 1);
        assert!(r.all_pass());
    }

    #[test]
    fn json_round_trip_and_schema() {
        let r = sample();
        let s = r.to_json();
        assert!(s.contains("\"schema\": 1"));
        assert!(!s.contains("elapsed_ms"));
        assert_eq!(VerificationReport::from_json(&s).unwrap(), r);
    }

    #[test]
    fn diff_ignores_version() {
        let a = sample();
        let mut b = sample();
        b.version = "9.9.9".into();
        assert!(diff(&a, &b).is_empty());
        b.entries[0].pass = false;
        let d = diff(&a, &b);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].key, "real-rooted[n=4,t=1/2]");
    }
}
