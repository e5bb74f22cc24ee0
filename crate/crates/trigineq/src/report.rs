//! Deterministic report assembly and serialization.
//!
//! JSON output is UTF-8 with keys sorted (the default `serde_json` map is a
//! BTreeMap) and rationals rendered as `{"num": string, "den": string}` to
//! preserve exactness. Wall-clock timings are deliberately excluded from the
//! serialized form so that identical configurations produce byte-identical
//! output. CSV output is one row per check with RFC-4180 quoting.

use crate::rat::Rat;
use crate::series::{AmVerdict, SuperadditivityReport, WParams};
use crate::verify::{CasePartitionReport, Certificate, LemmaReport, SharpnessReport, Verdict};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: &str = "report-v1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Exact rational as a JSON object of decimal strings.
pub fn rat_json(r: &Rat) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
    })
}

/// One result entry: a tagged JSON object plus its pass/fail standing.
#[derive(Debug, Clone)]
pub struct ResultEntry {
    pub value: Value,
    pub pass: bool,
}

pub fn certificate_entry(c: &Certificate) -> ResultEntry {
    let pass = matches!(c.verdict, Verdict::Proved | Verdict::NumericOnly);
    let value = json!({
        "kind": "certificate",
        "family": c.family.to_string(),
        "tag": c.family.tag.to_string(),
        "m": c.family.m,
        "n": c.family.n,
        "bound": rat_json(&c.bound),
        "interval": format!("{}..{}", c.interval.0, c.interval.1),
        "method": match c.method {
            crate::verify::Method::Sturm => "sturm",
            crate::verify::Method::Grid => "grid",
        },
        "variable": c.variable.to_string(),
        "degree": c.degree,
        "root_count_open": c.root_count_open,
        "root_count_closed": c.root_count_closed,
        "endpoint_signs": [c.endpoint_signs.0, c.endpoint_signs.1],
        "endpoint_zeros": c.endpoint_zeros,
        "verdict": c.verdict.to_string(),
        "witness": c.witness.map(|(x, v)| json!({"x": x, "value": v})),
        "scope": "per-instance",
    });
    ResultEntry { value, pass }
}

pub fn lemma_entry(r: &LemmaReport) -> ResultEntry {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "exact": c.exact,
                "pass": c.pass,
                "value": c.value,
            })
        })
        .collect();
    let pass = r.pass();
    let value = json!({
        "kind": "lemma",
        "lemma_id": r.lemma_id,
        "n": r.n,
        "checks": checks,
        "regime_warning": r.regime_warning,
        "pass": pass,
    });
    ResultEntry { value, pass }
}

pub fn sharpness_entry(r: &SharpnessReport) -> ResultEntry {
    let sequence: Vec<Value> = r
        .sequence
        .iter()
        .map(|(label, v, gap)| json!({"label": label, "value": v, "gap": gap}))
        .collect();
    let value = json!({
        "kind": "sharpness",
        "claim": r.claim,
        "target": r.target,
        "sequence": sequence,
        "final_gap": r.final_gap,
        "pass": r.pass,
    });
    ResultEntry {
        value,
        pass: r.pass,
    }
}

pub fn case_partition_entry(r: &CasePartitionReport) -> ResultEntry {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({"name": c.name, "exact": c.exact, "pass": c.pass, "value": c.value}))
        .collect();
    let pass = r.pass();
    let value = json!({
        "kind": "case_partition",
        "n": r.n,
        "case3_variant": r.case3_variant,
        "checks": checks,
        "regime_note": r.regime_note,
        "pass": pass,
    });
    ResultEntry { value, pass }
}

pub fn am_entry(p: &WParams, v: &AmVerdict) -> ResultEntry {
    let value = json!({
        "kind": "series_am",
        "m": p.m,
        "omega": rat_json(&p.omega),
        "verified_order": v.verified_order,
        "first_negative": v.first_negative,
        "pass": v.pass,
        "scope": "orders above the truncation are unverified",
    });
    ResultEntry {
        value,
        pass: v.pass,
    }
}

pub fn superadditivity_entry(p: &WParams, r: &SuperadditivityReport) -> ResultEntry {
    let value = json!({
        "kind": "superadditivity",
        "m": p.m,
        "omega": rat_json(&p.omega),
        "samples": r.samples,
        "worst_slack": r.worst_slack,
        "worst_point": [r.worst_point.0, r.worst_point.1],
        "pass": r.pass,
    });
    ResultEntry {
        value,
        pass: r.pass,
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub schema_version: String,
    pub tool_version: String,
    pub config: Value,
    pub results: Vec<Value>,
    pub summary: Summary,
    /// Measured but never serialized: keeps reruns byte-identical.
    #[serde(skip)]
    pub wall_time_ms: u128,
}

impl ReportEnvelope {
    pub fn new(config: Value, entries: Vec<ResultEntry>, wall_time_ms: u128) -> Self {
        let total = entries.len();
        let passed = entries.iter().filter(|e| e.pass).count();
        ReportEnvelope {
            schema_version: SCHEMA_VERSION.to_string(),
            tool_version: TOOL_VERSION.to_string(),
            config,
            results: entries.into_iter().map(|e| e.value).collect(),
            summary: Summary {
                total,
                passed,
                failed: total - passed,
            },
            wall_time_ms,
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    /// Canonical JSON bytes: sorted keys, pretty-printed, trailing newline.
    pub fn to_json_bytes(&self) -> Vec<u8> {
        let v = serde_json::to_value(self).expect("serializable envelope");
        let mut out = serde_json::to_vec_pretty(&v).expect("serializable value");
        out.push(b'\n');
        out
    }

    /// One CSV row per check: certificates are single rows; lemma and
    /// partition reports expand to one row per inner check.
    pub fn to_csv_bytes(&self) -> Vec<u8> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["kind", "id", "check", "detail", "pass", "value"])
            .expect("csv header");
        for r in &self.results {
            let kind = r["kind"].as_str().unwrap_or("unknown");
            match kind {
                "certificate" => {
                    let detail = format!(
                        "method={} roots_open={} endpoint_zeros={}",
                        r["method"].as_str().unwrap_or(""),
                        r["root_count_open"],
                        r["endpoint_zeros"]
                            .as_array()
                            .map(|a| a
                                .iter()
                                .filter_map(Value::as_str)
                                .collect::<Vec<_>>()
                                .join(";"))
                            .unwrap_or_default(),
                    );
                    let verdict = r["verdict"].as_str().unwrap_or("");
                    let pass = verdict == "proved" || verdict == "numeric_only";
                    w.write_record([
                        kind,
                        r["family"].as_str().unwrap_or(""),
                        "positivity",
                        &detail,
                        if pass { "true" } else { "false" },
                        verdict,
                    ])
                    .expect("csv row");
                }
                "lemma" | "case_partition" => {
                    let id = if kind == "lemma" {
                        r["lemma_id"].as_str().unwrap_or("").to_string()
                    } else {
                        format!("theorem5_n{}", r["n"])
                    };
                    for c in r["checks"].as_array().into_iter().flatten() {
                        w.write_record([
                            kind,
                            &id,
                            c["name"].as_str().unwrap_or(""),
                            if c["exact"].as_bool().unwrap_or(false) {
                                "exact"
                            } else {
                                "float"
                            },
                            if c["pass"].as_bool().unwrap_or(false) {
                                "true"
                            } else {
                                "false"
                            },
                            &c["value"]
                                .as_f64()
                                .map(|v| v.to_string())
                                .unwrap_or_default(),
                        ])
                        .expect("csv row");
                    }
                }
                "sharpness" => {
                    w.write_record([
                        kind,
                        r["claim"].as_str().unwrap_or(""),
                        "limit",
                        r["target"].as_str().unwrap_or(""),
                        if r["pass"].as_bool().unwrap_or(false) {
                            "true"
                        } else {
                            "false"
                        },
                        &r["final_gap"]
                            .as_f64()
                            .map(|v| v.to_string())
                            .unwrap_or_default(),
                    ])
                    .expect("csv row");
                }
                _ => {
                    let id = format!(
                        "m={} omega={}/{}",
                        r["m"],
                        r["omega"]["num"].as_str().unwrap_or("?"),
                        r["omega"]["den"].as_str().unwrap_or("?"),
                    );
                    w.write_record([
                        kind,
                        &id,
                        "series",
                        "",
                        if r["pass"].as_bool().unwrap_or(false) {
                            "true"
                        } else {
                            "false"
                        },
                        "",
                    ])
                    .expect("csv row");
                }
            }
        }
        w.into_inner().expect("csv buffer")
    }
}
