//! Co-criticality verification and structural audits of max-red colorings.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrowing::{arrows, ramsey_star, ArrowStatus, ArrowVerdict};
use crate::bitset;
use crate::bounds;
use crate::coloring::{Color, EdgeColoring, PairParams};
use crate::engine::{enumerate_red_at_least, max_red_critical, SearchBudget, SearchStatus};
use crate::graph::{Graph, VertexSet};
use crate::props;
use crate::Rational;

/// `g` has no `K_t`, and adding any missing edge creates one.
pub fn is_kt_saturated(g: &Graph, t: usize) -> bool {
    assert!(t >= 2, "saturation needs t >= 2");
    if props::contains_clique(g, t, None).is_some() {
        return false;
    }
    g.non_edges().all(|(u, v)| {
        let common: Vec<u64> = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        let mut buf = Vec::new();
        let row = |x: usize| g.row(x);
        bitset::find_clique(&row, &common, t - 2, &mut buf)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonEdgeResult {
    pub u: usize,
    pub v: usize,
    pub verdict: ArrowVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    /// Complete graphs are excluded by definition.
    Complete,
    /// The graph itself arrows: it has no critical coloring.
    BaseArrows,
    /// Adding `uv` still leaves a critical coloring.
    AugmentationColorable { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CocriticalVerdict {
    CoCritical,
    NotCoCritical(Refutation),
    /// Some searches ran out of budget. `base_unknown` marks the base graph.
    Unverified {
        base_unknown: bool,
        unknown_edges: Vec<(usize, usize)>,
    },
}

impl CocriticalVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            CocriticalVerdict::CoCritical => "CoCritical",
            CocriticalVerdict::NotCoCritical(_) => "NotCoCritical",
            CocriticalVerdict::Unverified { .. } => "Unverified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocriticalReport {
    pub params: PairParams,
    /// Verdict on the base graph; `NotArrows` carries its critical coloring.
    pub base: ArrowVerdict,
    pub nonedge_results: Vec<NonEdgeResult>,
    pub verdict: CocriticalVerdict,
}

impl CocriticalReport {
    pub fn base_has_critical(&self) -> bool {
        matches!(self.base.status, ArrowStatus::NotArrows(_))
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.base.status {
            ArrowStatus::NotArrows(c) => Some(c),
            _ => None,
        }
    }
}

/// Decides whether `g` is `(K_t, K_{1,k})`-co-critical.
///
/// Each non-edge `uv` is checked independently (in parallel) with its own
/// copy of `budget`; budget exhaustion is reported per edge.
pub fn verify_cocritical(g: &Graph, p: PairParams, budget: SearchBudget) -> CocriticalReport {
    let base = arrows(g, p, budget);
    let mut report = CocriticalReport {
        params: p,
        base,
        nonedge_results: Vec::new(),
        verdict: CocriticalVerdict::CoCritical,
    };
    if g.is_complete() {
        report.verdict = CocriticalVerdict::NotCoCritical(Refutation::Complete);
        return report;
    }
    match report.base.status {
        ArrowStatus::Arrows => {
            report.verdict = CocriticalVerdict::NotCoCritical(Refutation::BaseArrows);
            return report;
        }
        ArrowStatus::Unknown => {
            report.verdict = CocriticalVerdict::Unverified {
                base_unknown: true,
                unknown_edges: Vec::new(),
            };
            return report;
        }
        ArrowStatus::NotArrows(_) => {}
    }

    let pairs: Vec<(usize, usize)> = g.non_edges().collect();
    report.nonedge_results = pairs
        .par_iter()
        .map(|&(u, v)| {
            let h = g.add_edge(u, v).expect("non-edge");
            NonEdgeResult {
                u,
                v,
                verdict: arrows(&h, p, budget),
            }
        })
        .collect();

    let colorable = report
        .nonedge_results
        .iter()
        .find(|r| matches!(r.verdict.status, ArrowStatus::NotArrows(_)));
    let unknown: Vec<(usize, usize)> = report
        .nonedge_results
        .iter()
        .filter(|r| r.verdict.status == ArrowStatus::Unknown)
        .map(|r| (r.u, r.v))
        .collect();
    report.verdict = if let Some(r) = colorable {
        CocriticalVerdict::NotCoCritical(Refutation::AugmentationColorable { u: r.u, v: r.v })
    } else if !unknown.is_empty() {
        CocriticalVerdict::Unverified {
            base_unknown: false,
            unknown_edges: unknown,
        }
    } else {
        assert_certified_bounds(g, p);
        CocriticalVerdict::CoCritical
    };
    report
}

/// Every certified co-critical graph must respect the known lower bounds; a
/// violation means a bug in the searcher.
fn assert_certified_bounds(g: &Graph, p: PairParams) {
    let n = g.n();
    let e = g.edge_count();
    let r = ramsey_star(p.t(), p.k()).expect("valid pair");
    assert!(n >= r, "co-critical graph on {n} < {r} vertices");
    if p.t() == 3 {
        let lb: Rational = bounds::lower_bound_edges(3, p.k(), n).expect("t = 3 bound");
        assert!(
            Rational::from(e as i64) >= lb,
            "co-critical graph with {e} edges below the lower bound {lb}"
        );
        if p.k() == 3 && n >= 13 {
            assert!(
                e >= bounds::three_claw_bound(n),
                "co-critical graph with {e} < 3n - 4 edges"
            );
        }
    }
}

/// Structural quantities of a critical coloring with maximum red size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaAudit {
    pub t: usize,
    pub k: usize,
    pub n: usize,
    pub red_edges: usize,
    /// Vertices of blue degree at most `k - 2`.
    pub s: Vec<usize>,
    pub s_is_clique: bool,
    pub alpha_blue_s: usize,
    pub delta_red: usize,
    #[serde(rename = "Delta_red")]
    pub max_degree_red: usize,
    pub red_saturated: bool,
    /// Only computed for `t = 3`.
    pub red_2connected: Option<bool>,
    /// Largest number of triangles of the host graph on one red edge (`t = 3`).
    pub max_triangles_per_red_edge: Option<usize>,
    pub hajnal_ok: bool,
}

impl LemmaAudit {
    /// Computes every field from the host, the coloring and the pair.
    pub fn compute(g: &Graph, c: &EdgeColoring, p: PairParams) -> Self {
        let n = g.n();
        let (t, k) = (p.t(), p.k());
        let red = c.red_graph();
        let blue = c.blue_graph();
        let s: Vec<usize> = (0..n).filter(|&v| blue.degree(v) + 2 <= k).collect();
        let s_is_clique = s
            .iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        let s_set = VertexSet::from_iter_in(n, s.iter().copied());
        let alpha_blue_s = props::independence_number(&blue, &s_set);
        let (red_2connected, max_triangles) = if t == 3 {
            let tri = c
                .iter()
                .filter(|&(_, col)| col == Color::Red)
                .map(|((u, v), _)| g.common_neighbor_count(u, v))
                .max()
                .unwrap_or(0);
            (Some(props::is_2connected(&red)), Some(tri))
        } else {
            (None, None)
        };
        LemmaAudit {
            t,
            k,
            n,
            red_edges: red.edge_count(),
            s,
            s_is_clique,
            alpha_blue_s,
            delta_red: red.min_degree(),
            max_degree_red: red.max_degree(),
            red_saturated: is_kt_saturated(&red, t),
            red_2connected,
            max_triangles_per_red_edge: max_triangles,
            hajnal_ok: props::hajnal_dichotomy(&red, t),
        }
    }

    /// Each named check with its outcome.
    pub fn checks(&self) -> Vec<(&'static str, bool)> {
        let (t, k, n) = (self.t, self.k, self.n);
        let mut out = vec![
            ("s_is_clique", self.s_is_clique),
            ("alpha_blue_s_le_t_minus_1", self.alpha_blue_s < t),
            ("s_size_le_(t-1)(k-1)", self.s.len() <= (t - 1) * (k - 1)),
            ("max_red_degree_le_n_minus_2", self.max_degree_red + 2 <= n),
            ("min_red_degree_ge_2(t-2)", self.delta_red >= 2 * (t - 2)),
            ("red_saturated", self.red_saturated),
            ("hajnal", self.hajnal_ok),
        ];
        if t == 3 {
            out.push(("red_2connected", self.red_2connected == Some(true)));
            out.push(("max_red_degree_le_n_minus_3", self.max_degree_red + 3 <= n));
            out.push((
                "triangles_per_red_edge_le_2k-2",
                self.max_triangles_per_red_edge
                    .is_some_and(|x| x <= 2 * k - 2),
            ));
        }
        out
    }

    pub fn all_pass(&self) -> bool {
        self.checks().iter().all(|&(_, ok)| ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AuditOutcome {
    Audited {
        coloring: EdgeColoring,
        audit: LemmaAudit,
        nodes: u64,
    },
    /// `g` has no critical coloring at all.
    NoCriticalColoring { nodes: u64 },
    /// The max-red search ran out of budget; no field is known.
    Unknown { nodes: u64 },
}

/// Audits the first max-red critical coloring the searcher finds.
pub fn audit_structure(g: &Graph, p: PairParams, budget: SearchBudget) -> AuditOutcome {
    let out = max_red_critical(g, p, budget);
    let nodes = out.nodes_explored;
    match out.status {
        SearchStatus::Found(c) => AuditOutcome::Audited {
            audit: LemmaAudit::compute(g, &c, p),
            coloring: c,
            nodes,
        },
        SearchStatus::NoneExists => AuditOutcome::NoCriticalColoring { nodes },
        SearchStatus::Exhausted => AuditOutcome::Unknown { nodes },
    }
}

/// Audits every max-red critical coloring (up to `limit`). `None` when a
/// search ran out of budget or `g` has no critical coloring.
pub fn audit_all_optima(
    g: &Graph,
    p: PairParams,
    limit: usize,
    budget: SearchBudget,
) -> Option<Vec<(EdgeColoring, LemmaAudit)>> {
    let best = match max_red_critical(g, p, budget).status {
        SearchStatus::Found(c) => c.red_count(),
        _ => return None,
    };
    let all = enumerate_red_at_least(g, p, best, limit, budget);
    if !all.complete && !all.hit_limit {
        return None;
    }
    Some(
        all.colorings
            .into_iter()
            .map(|c| {
                let a = LemmaAudit::compute(g, &c, p);
                (c, a)
            })
            .collect(),
    )
}
