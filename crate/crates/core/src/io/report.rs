//! Machine-readable results.
//!
//! The JSON object always carries `task`, `labels`, `char`, `c`, `j`, `ht`,
//! `ell`, `verdict`, `witness_index`, `seeds`, `route`, `crosschecks` and
//! `warnings` (absent values are `null`, `warnings` is `[]` when empty).
//! Task-specific sections follow and are left out when they do not apply.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::dependence::Verdict;
use crate::multseq::{Crosscheck, Route};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sequences {
    pub small: Vec<u64>,
    pub large: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SvSection {
    pub degrees: Vec<u64>,
    pub sum: u64,
    pub degree_x: i128,
    pub degree_y: i128,
    pub degree_product: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSection {
    /// Coefficients of `N(t)` in `N(t) / (1 - t)^n`.
    pub numerator: Vec<i128>,
    pub nvars: usize,
    pub dimension: i64,
    pub degree: i128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<i128>,
    /// Hilbert–Samuel multiplicity `e(I)`, when `I` is primary to the maximal ideal.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samuel_multiplicity: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointSection {
    pub height: usize,
    pub analytic_spread: usize,
    pub agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub task: String,
    pub labels: Vec<String>,
    #[serde(rename = "char")]
    pub characteristic: u64,
    pub c: Option<Vec<u64>>,
    pub j: Option<u64>,
    pub ht: Option<usize>,
    pub ell: Option<usize>,
    pub verdict: Option<Verdict>,
    pub witness_index: Option<usize>,
    pub seeds: Vec<u64>,
    pub route: Option<Route>,
    pub crosschecks: Vec<Crosscheck>,
    pub warnings: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sequences: Option<Sequences>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deltas: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub endpoints: Option<EndpointSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sv: Option<SvSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hilbert: Option<HilbertSection>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

impl Report {
    pub fn new(task: &str, labels: Vec<String>, characteristic: u64) -> Self {
        Self {
            task: task.to_string(),
            labels,
            characteristic,
            c: None,
            j: None,
            ht: None,
            ell: None,
            verdict: None,
            witness_index: None,
            seeds: Vec::new(),
            route: None,
            crosschecks: Vec::new(),
            warnings: Vec::new(),
            sequences: None,
            deltas: None,
            oracle: None,
            endpoints: None,
            sv: None,
            hilbert: None,
            timings_ms: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Text,
}

pub fn emit_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => text(report),
    }
}

fn list<T: std::fmt::Display>(xs: &[T]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn text(r: &Report) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "task: {} {}", r.task, r.labels.join(" "));
    let _ = writeln!(s, "field: {}", if r.characteristic == 0 { "QQ".to_string() } else { format!("F_{}", r.characteristic) });
    if let Some(route) = r.route {
        let _ = writeln!(s, "route: {route}");
    }
    if let Some(c) = &r.c {
        let _ = writeln!(s, "c: {}", list(c));
    }
    if let Some(j) = r.j {
        let _ = writeln!(s, "j-multiplicity: {j}");
    }
    if let (Some(ht), Some(ell)) = (r.ht, r.ell) {
        let _ = writeln!(s, "height: {ht}");
        let _ = writeln!(s, "analytic spread: {ell}");
    }
    if let Some(e) = &r.endpoints {
        let _ = writeln!(
            s,
            "independent check: height {}, analytic spread {} ({})",
            e.height,
            e.analytic_spread,
            if e.agrees { "agrees" } else { "DISAGREES" }
        );
    }
    if let Some(q) = &r.sequences {
        let _ = writeln!(s, "c(small): {}", list(&q.small));
        let _ = writeln!(s, "c(large): {}", list(&q.large));
    }
    if let Some(d) = &r.deltas {
        let _ = writeln!(s, "deltas: {}", list(d));
    }
    if let Some(v) = r.verdict {
        let _ = writeln!(s, "verdict: {}", v.as_str());
    }
    if let Some(w) = r.witness_index {
        let _ = writeln!(s, "witness index: {w}");
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(s, "reduction oracle: {o}");
    }
    if let Some(sv) = &r.sv {
        let _ = writeln!(s, "deg v_i: {}", list(&sv.degrees));
        let _ = writeln!(s, "sum: {}", sv.sum);
        let _ = writeln!(s, "deg X * deg Y: {} * {} = {}", sv.degree_x, sv.degree_y, sv.degree_product);
    }
    if let Some(h) = &r.hilbert {
        let _ = writeln!(s, "hilbert numerator: {} over (1-t)^{}", list(&h.numerator), h.nvars);
        let _ = writeln!(s, "dimension: {}", h.dimension);
        let _ = writeln!(s, "degree: {}", h.degree);
        if let Some(l) = h.length {
            let _ = writeln!(s, "length: {l}");
        }
        if let Some(e) = h.samuel_multiplicity {
            let _ = writeln!(s, "samuel multiplicity: {e}");
        }
    }
    if !r.seeds.is_empty() {
        let _ = writeln!(s, "seeds: {}", list(&r.seeds));
    }
    for x in &r.crosschecks {
        let _ = writeln!(
            s,
            "crosscheck route {}{}: {} ({})",
            x.route,
            if x.seeds.is_empty() { String::new() } else { format!(" seeds {}", list(&x.seeds)) },
            list(&x.c),
            if x.agrees { "agrees" } else { "DISAGREES" }
        );
    }
    if let Some(t) = &r.timings_ms {
        for (k, v) in t {
            let _ = writeln!(s, "time {k}: {v} ms");
        }
    }
    for w in &r.warnings {
        let _ = writeln!(s, "warning: {w}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_fields_always_present() {
        let r = Report::new("multseq", vec!["I".into()], 32003);
        let v: serde_json::Value = serde_json::from_str(&emit_report(&r, ReportFormat::Json)).unwrap();
        for key in ["c", "j", "ht", "ell", "verdict", "witness_index", "seeds", "route", "crosschecks", "warnings"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["warnings"], serde_json::json!([]));
        assert!(v.get("timings_ms").is_none());
    }

    #[test]
    fn text_lists_results() {
        let mut r = Report::new("multseq", vec!["I".into()], 0);
        r.c = Some(vec![0, 1, 2]);
        r.warnings.push("careful".into());
        let t = emit_report(&r, ReportFormat::Text);
        assert!(t.contains("c: [0, 1, 2]"));
        assert!(t.contains("field: QQ"));
        assert!(t.contains("warning: careful"));
    }
}
