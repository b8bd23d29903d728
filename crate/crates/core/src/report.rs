//! Versioned JSON reports and their plain-text rendering.
//!
//! Every report is an [`Envelope`] around a command-specific body. The text
//! form is produced from the JSON value, so both formats carry the same data.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;

use crate::arrowing::{ArrowStatus, ArrowVerdict};
use crate::cocritical::{
    AuditOutcome, CocriticalReport, CocriticalVerdict, LemmaAudit, Refutation,
};
use crate::coloring::EdgeColoring;
use crate::graph::Graph;
use crate::graph6::emit_graph6;

pub const SCHEMA: &str = "cocritical-report/1";

/// How a command ended; maps one-to-one onto process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Success,
    Refuted,
    Unknown,
}

impl Outcome {
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Success => 0,
            Outcome::Refuted => 1,
            Outcome::Unknown => 2,
        }
    }

    pub fn of_verdict(v: &CocriticalVerdict) -> Self {
        match v {
            CocriticalVerdict::CoCritical => Outcome::Success,
            CocriticalVerdict::NotCoCritical(_) => Outcome::Refuted,
            CocriticalVerdict::Unverified { .. } => Outcome::Unknown,
        }
    }
}

/// Run metadata; omitted entirely for byte-reproducible output.
#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub unix_time: u64,
    pub runtime_ms: u128,
}

impl Meta {
    pub fn now(runtime: Duration) -> Self {
        Meta {
            unix_time: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
            runtime_ms: runtime.as_millis(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Envelope<T> {
    pub schema: &'static str,
    pub command: &'static str,
    pub outcome: Outcome,
    #[serde(flatten)]
    pub body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl<T: Serialize> Envelope<T> {
    pub fn new(command: &'static str, outcome: Outcome, body: T) -> Self {
        Envelope {
            schema: SCHEMA,
            command,
            outcome,
            body,
            meta: None,
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

/// Coloring as `"u v R"` / `"u v B"` strings, one per edge.
pub fn coloring_lines(c: &EdgeColoring) -> Vec<String> {
    c.lines()
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub n: usize,
    pub edges: usize,
    pub graph6: String,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            n: g.n(),
            edges: g.edge_count(),
            graph6: emit_graph6(g),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ArrowJson {
    pub status: &'static str,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_coloring: Option<Vec<String>>,
}

impl ArrowJson {
    pub fn of(v: &ArrowVerdict) -> Self {
        ArrowJson {
            status: v.label(),
            nodes: v.nodes,
            witness_coloring: match &v.status {
                ArrowStatus::NotArrows(c) => Some(coloring_lines(c)),
                _ => None,
            },
        }
    }

    pub fn outcome(v: &ArrowVerdict) -> Outcome {
        match v.status {
            ArrowStatus::Arrows | ArrowStatus::NotArrows(_) => Outcome::Success,
            ArrowStatus::Unknown => Outcome::Unknown,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NonEdgeJson {
    pub u: usize,
    pub v: usize,
    pub status: &'static str,
    pub nodes: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditJson {
    pub status: &'static str,
    pub nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fields: Option<LemmaAudit>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub checks: Option<BTreeMap<&'static str, bool>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_pass: Option<bool>,
}

impl AuditJson {
    pub fn of(a: &AuditOutcome) -> Self {
        match a {
            AuditOutcome::Audited {
                coloring,
                audit,
                nodes,
            } => AuditJson {
                status: "audited",
                nodes: *nodes,
                coloring: Some(coloring_lines(coloring)),
                checks: Some(audit.checks().into_iter().collect()),
                all_pass: Some(audit.all_pass()),
                fields: Some(audit.clone()),
            },
            AuditOutcome::NoCriticalColoring { nodes } => AuditJson {
                status: "no_critical_coloring",
                nodes: *nodes,
                coloring: None,
                fields: None,
                checks: None,
                all_pass: None,
            },
            AuditOutcome::Unknown { nodes } => AuditJson {
                status: "unknown",
                nodes: *nodes,
                coloring: None,
                fields: None,
                checks: None,
                all_pass: None,
            },
        }
    }

    pub fn outcome(a: &AuditOutcome) -> Outcome {
        match a {
            AuditOutcome::Audited { audit, .. } if audit.all_pass() => Outcome::Success,
            AuditOutcome::Audited { .. } | AuditOutcome::NoCriticalColoring { .. } => {
                Outcome::Refuted
            }
            AuditOutcome::Unknown { .. } => Outcome::Unknown,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyJson {
    pub t: usize,
    pub k: usize,
    pub graph: GraphSummary,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<Refutation>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unknown_edges: Vec<(usize, usize)>,
    pub base: ArrowJson,
    pub witness_coloring: Option<Vec<String>>,
    pub nonedges: Vec<NonEdgeJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<AuditJson>,
}

impl VerifyJson {
    pub fn of(g: &Graph, r: &CocriticalReport, audit: Option<&AuditOutcome>) -> Self {
        let (reason, unknown_edges) = match &r.verdict {
            CocriticalVerdict::CoCritical => (None, Vec::new()),
            CocriticalVerdict::NotCoCritical(why) => (Some(why.clone()), Vec::new()),
            CocriticalVerdict::Unverified { unknown_edges, .. } => (None, unknown_edges.clone()),
        };
        VerifyJson {
            t: r.params.t(),
            k: r.params.k(),
            graph: GraphSummary::of(g),
            verdict: r.verdict.label(),
            reason,
            unknown_edges,
            base: ArrowJson {
                witness_coloring: None,
                ..ArrowJson::of(&r.base)
            },
            witness_coloring: r.witness().map(coloring_lines),
            nonedges: r
                .nonedge_results
                .iter()
                .map(|x| NonEdgeJson {
                    u: x.u,
                    v: x.v,
                    status: x.verdict.label(),
                    nodes: x.verdict.nodes,
                })
                .collect(),
            audit: audit.map(AuditJson::of),
        }
    }
}

/// Renders a JSON report as indented `key: value` text.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(x) => Some(x.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// One-line form for arrays of scalars and flat objects.
fn inline(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Array(xs) => {
            let parts: Option<Vec<String>> = xs.iter().map(scalar).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(m) => {
            let parts: Option<Vec<String>> = m
                .iter()
                .map(|(k, x)| {
                    inline(x)
                        .filter(|_| !x.is_object())
                        .map(|s| format!("{k}={s}"))
                })
                .collect();
            parts.map(|p| p.join(" "))
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_into(out, x, depth + 1);
                    }
                    Value::Array(xs) if xs.iter().any(|y| !y.is_array() && scalar(y).is_none()) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for y in xs {
                            match inline(y) {
                                Some(s) => {
                                    let _ = writeln!(out, "{pad}  - {s}");
                                }
                                None => render_into(out, y, depth + 2),
                            }
                        }
                    }
                    Value::Array(xs) if xs.iter().all(|y| y.is_string()) && xs.len() > 8 => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for y in xs {
                            let _ = writeln!(out, "{pad}  {}", y.as_str().unwrap_or_default());
                        }
                    }
                    _ => {
                        let s = inline(x).unwrap_or_else(|| x.to_string());
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                }
            }
        }
        other => {
            let s = inline(other).unwrap_or_else(|| other.to_string());
            let _ = writeln!(out, "{pad}{s}");
        }
    }
}
