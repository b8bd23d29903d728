//! Instance generators: random saturated graphs, exhaustive enumeration of
//! small co-critical graphs, and a local search for sparse co-critical graphs.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arrowing::{arrows, ramsey_star, ArrowStatus};
use crate::bitset;
use crate::cocritical::{verify_cocritical, CocriticalVerdict};
use crate::coloring::PairParams;
use crate::constructions;
use crate::engine::SearchBudget;
use crate::error::ParamError;
use crate::graph::Graph;
use crate::iso::{are_isomorphic, invariant_key};

/// Seed for the deterministic ChaCha8 stream used by every generator here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSeed(pub u64);

impl RngSeed {
    fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// Greedy random `K_t`-saturated graph: all vertex pairs are shuffled and
/// each is added unless it would close a `K_t`.
pub fn random_maximal_ktfree(n: usize, t: usize, seed: RngSeed) -> Result<Graph, ParamError> {
    if t < 2 {
        return Err(ParamError::range("t", t, ">= 2"));
    }
    if n < t {
        return Err(ParamError::range("n", n, format!(">= t = {t}")));
    }
    let mut rng = seed.rng();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut g = Graph::try_new(n).map_err(|e| ParamError::Invalid(e.to_string()))?;
    let mut buf = Vec::new();
    for (u, v) in pairs {
        let common: Vec<u64> = g.row(u).iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        buf.clear();
        let row = |x: usize| g.row(x);
        if !bitset::find_clique(&row, &common, t - 2, &mut buf) {
            g.set_edge(u, v);
        }
    }
    Ok(g)
}

/// Largest order accepted by [`enumerate_small_cocritical`].
pub const ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone)]
pub struct SmallCocritical {
    pub n: usize,
    pub params: PairParams,
    /// One representative per isomorphism class, sorted by edge count then
    /// graph6 string.
    pub graphs: Vec<Graph>,
    /// Labeled graphs surviving the ordering filter.
    pub candidates: usize,
    /// Isomorphism classes examined.
    pub classes: usize,
}

impl SmallCocritical {
    pub fn min_edges(&self) -> Option<usize> {
        self.graphs.iter().map(Graph::edge_count).min()
    }
}

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn graph_from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Graph {
    let mut g = Graph::new(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.set_edge(u, v);
        }
    }
    g
}

/// Ordering filter: degrees non-increasing, and no transposition of two
/// consecutive equal-degree vertices gives a smaller mask. The minimum of each
/// orbit under (degree sequence descending, mask) passes, so every
/// isomorphism class keeps at least one labeled member.
fn passes_order_filter(n: usize, pidx: &[usize], mask: u64) -> bool {
    let mut deg = [0u32; ENUMERATION_CAP];
    let mut p = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> p & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
            p += 1;
        }
    }
    if (1..n).any(|i| deg[i] > deg[i - 1]) {
        return false;
    }
    for i in 0..n.saturating_sub(1) {
        if deg[i] != deg[i + 1] {
            continue;
        }
        let swap = |x: usize| {
            if x == i {
                i + 1
            } else if x == i + 1 {
                i
            } else {
                x
            }
        };
        let mut permuted = 0u64;
        let mut q = 0;
        for u in 0..n {
            for v in u + 1..n {
                if mask >> q & 1 == 1 {
                    let (a, b) = (swap(u), swap(v));
                    permuted |= 1 << pidx[a.min(b) * n + a.max(b)];
                }
                q += 1;
            }
        }
        if permuted < mask {
            return false;
        }
    }
    true
}

/// Isomorphism classes bucketed by invariant key.
type Classes = HashMap<Vec<usize>, Vec<Graph>>;

/// Adds `g` to `classes` unless an isomorphic graph is already present.
fn insert_class(classes: &mut Classes, g: Graph) {
    let bucket = classes.entry(invariant_key(&g)).or_default();
    if !bucket
        .iter()
        .any(|h| are_isomorphic(h, &g).expect("small graph").is_some())
    {
        bucket.push(g);
    }
}

/// All `(K_t, K_{1,k})`-co-critical graphs on `n <= 8` vertices, one per
/// isomorphism class.
///
/// Labeled graphs are split by the bit pattern of vertex 0's row; partitions
/// run in parallel, each filtered and reduced up to isomorphism, then merged.
pub fn enumerate_small_cocritical(n: usize, p: PairParams) -> Result<SmallCocritical, ParamError> {
    if n > ENUMERATION_CAP {
        return Err(ParamError::range("n", n, format!("<= {ENUMERATION_CAP}")));
    }
    let mut result = SmallCocritical {
        n,
        params: p,
        graphs: Vec::new(),
        candidates: 0,
        classes: 0,
    };
    if n < ramsey_star(p.t(), p.k())? {
        return Ok(result);
    }
    let pairs = pair_list(n);
    let mut pidx = vec![0usize; n * n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pidx[u * n + v] = i;
    }
    let head_bits = n - 1;
    let tail_bits = pairs.len() - head_bits;

    let partials: Vec<(usize, Classes)> = (0..1u64 << head_bits)
        .into_par_iter()
        .map(|head| {
            let mut classes = HashMap::new();
            let mut seen = 0;
            for tail in 0..1u64 << tail_bits {
                let mask = head | tail << head_bits;
                if passes_order_filter(n, &pidx, mask) {
                    seen += 1;
                    insert_class(&mut classes, graph_from_mask(n, &pairs, mask));
                }
            }
            (seen, classes)
        })
        .collect();

    let mut classes = Classes::new();
    for (seen, part) in partials {
        result.candidates += seen;
        for g in part.into_values().flatten() {
            insert_class(&mut classes, g);
        }
    }
    let reps: Vec<Graph> = classes.into_values().flatten().collect();
    result.classes = reps.len();

    let mut graphs: Vec<Graph> = reps
        .into_par_iter()
        .filter(|g| {
            !g.is_complete()
                && verify_cocritical(g, p, SearchBudget::unlimited()).verdict
                    == CocriticalVerdict::CoCritical
        })
        .collect();
    graphs.sort_by_cached_key(|g| (g.edge_count(), crate::graph6::emit_graph6(g)));
    result.graphs = graphs;
    Ok(result)
}

/// Limits for [`local_search_cocritical`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalSearchBudget {
    /// Number of remove-and-complete moves.
    pub moves: usize,
    /// Budget for every individual arrowing check.
    pub per_check: SearchBudget,
    pub wall_limit: Duration,
}

impl LocalSearchBudget {
    pub fn moves(moves: usize) -> Self {
        LocalSearchBudget {
            moves,
            per_check: SearchBudget::unlimited(),
            wall_limit: Duration::from_secs(u64::MAX / 4),
        }
    }
}

#[derive(Debug, Clone)]
pub struct LocalSearchResult {
    pub start: Graph,
    /// Sparsest graph certified co-critical, or the start when nothing was
    /// certified.
    pub best: Graph,
    pub verdict: CocriticalVerdict,
    pub moves_tried: usize,
    pub moves_accepted: usize,
}

/// Adds non-edges of `g` in the given order whenever the augmented graph still
/// has a critical coloring. The result is saturated for non-arrowing.
fn complete_to_saturation(
    mut g: Graph,
    order: &[(usize, usize)],
    p: PairParams,
    budget: SearchBudget,
) -> Graph {
    for &(u, v) in order {
        if g.has_edge(u, v) {
            continue;
        }
        let h = g.add_edge(u, v).expect("non-edge");
        if matches!(arrows(&h, p, budget).status, ArrowStatus::NotArrows(_)) {
            g = h;
        }
    }
    g
}

/// Local search toward sparse co-critical graphs on `n` vertices.
///
/// Starts from the construction when `(t, k, n)` is in its regime, otherwise
/// from a random saturation of the edgeless graph. A move deletes a random
/// edge, then re-adds non-edges in random order (the deleted edge last)
/// whenever the graph keeps a critical coloring. Candidates are accepted only
/// after full re-verification and when they do not add edges.
pub fn local_search_cocritical(
    p: PairParams,
    n: usize,
    seed: RngSeed,
    budget: LocalSearchBudget,
) -> Result<LocalSearchResult, ParamError> {
    let r = ramsey_star(p.t(), p.k())?;
    if n < r {
        return Err(ParamError::range("n", n, format!(">= {r}")));
    }
    let started = Instant::now();
    let mut rng = seed.rng();
    let start = match constructions::build(p.t(), p.k(), n) {
        Ok(c) => c.graph,
        Err(_) => {
            let mut order = pair_list(n);
            order.shuffle(&mut rng);
            complete_to_saturation(Graph::new(n), &order, p, budget.per_check)
        }
    };
    let mut result = LocalSearchResult {
        start: start.clone(),
        best: start.clone(),
        verdict: CocriticalVerdict::Unverified {
            base_unknown: true,
            unknown_edges: Vec::new(),
        },
        moves_tried: 0,
        moves_accepted: 0,
    };
    if budget.moves == 0 {
        return Ok(result);
    }
    let first = verify_cocritical(&start, p, budget.per_check);
    let mut current = start;
    let mut have_certified = first.verdict == CocriticalVerdict::CoCritical;
    result.verdict = first.verdict;

    while result.moves_tried < budget.moves && started.elapsed() < budget.wall_limit {
        result.moves_tried += 1;
        let edges: Vec<(usize, usize)> = current.edges().collect();
        if edges.is_empty() {
            break;
        }
        let removed = edges[rng.gen_range(0..edges.len())];
        let reduced = current.remove_edge(removed.0, removed.1).expect("edge");
        let mut order: Vec<(usize, usize)> =
            reduced.non_edges().filter(|&e| e != removed).collect();
        order.shuffle(&mut rng);
        order.push(removed);
        let cand = complete_to_saturation(reduced, &order, p, budget.per_check);
        if cand == current || cand.edge_count() > current.edge_count() {
            continue;
        }
        let report = verify_cocritical(&cand, p, budget.per_check);
        if report.verdict != CocriticalVerdict::CoCritical {
            continue;
        }
        result.moves_accepted += 1;
        if !have_certified || cand.edge_count() < result.best.edge_count() {
            result.best = cand.clone();
            result.verdict = report.verdict;
            have_certified = true;
        }
        current = cand;
    }
    Ok(result)
}
