use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::covers::CoverCensus;

pub const TOOL_VERSION: &str = concat!("unmixed ", env!("CARGO_PKG_VERSION"));

/// Outcome of a run, printed for humans or as JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    /// SHA-256 of the input file, or of the canonical parameter string for
    /// commands without an input file.
    pub input_digest: String,
    pub verdict: Verdict,
    pub witnesses: Option<Value>,
    pub census_summary: Option<CensusSummary>,
    pub details: BTreeMap<String, Value>,
    pub timing_ms: u64,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Verdict {
    Holds(bool),
    Count(usize),
    Status(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusSummary {
    pub maximal_independent_sets: usize,
    pub minimal_vertex_covers: usize,
    pub size_histogram: BTreeMap<usize, usize>,
    pub covering_number: usize,
    pub independence_number: usize,
    pub is_unmixed: bool,
}

impl From<&CoverCensus> for CensusSummary {
    fn from(c: &CoverCensus) -> Self {
        CensusSummary {
            maximal_independent_sets: c.maximal_independent_sets.len(),
            minimal_vertex_covers: c.minimal_vertex_covers.len(),
            size_histogram: c.size_histogram.clone(),
            covering_number: c.covering_number,
            independence_number: c.independence_number,
            is_unmixed: c.is_unmixed,
        }
    }
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    hash.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

impl Report {
    pub fn new(command: &str, input_digest: String, verdict: Verdict) -> Self {
        Report {
            command: command.to_string(),
            input_digest,
            verdict,
            witnesses: None,
            census_summary: None,
            details: BTreeMap::new(),
            timing_ms: 0,
            tool_version: TOOL_VERSION.to_string(),
        }
    }

    pub fn detail(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report values serialize");
        self.details.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the timing field removed, for reproducibility checks.
    pub fn to_json_without_timing(&self) -> String {
        let mut value = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(map) = &mut value {
            map.remove("timing_ms");
        }
        serde_json::to_string_pretty(&value).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let verdict = match &self.verdict {
            Verdict::Holds(b) => b.to_string(),
            Verdict::Count(c) => c.to_string(),
            Verdict::Status(s) => s.clone(),
        };
        let _ = writeln!(out, "command: {}", self.command);
        let _ = writeln!(out, "verdict: {verdict}");
        if let Some(c) = &self.census_summary {
            let histogram: Vec<String> = c
                .size_histogram
                .iter()
                .map(|(k, v)| format!("{k}:{v}"))
                .collect();
            let _ = writeln!(out, "cover sizes: {{{}}}", histogram.join(", "));
            let _ = writeln!(
                out,
                "minimal covers: {}  covering number: {}  independence number: {}",
                c.minimal_vertex_covers, c.covering_number, c.independence_number
            );
        }
        if let Some(w) = &self.witnesses {
            let _ = writeln!(out, "witnesses: {w}");
        }
        for (key, value) in &self.details {
            let _ = writeln!(out, "{key}: {value}");
        }
        let _ = writeln!(out, "input digest: {}", self.input_digest);
        let _ = writeln!(out, "time: {} ms", self.timing_ms);
        out
    }
}
