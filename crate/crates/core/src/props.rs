//! Elementary structural queries: cliques, connectivity, independence.

use crate::bitset;
use crate::graph::{Graph, VertexSet};

/// Returns a clique of order `t` (inside `within`, when given), or `None`.
///
/// The witness is sorted ascending.
pub fn contains_clique(g: &Graph, t: usize, within: Option<&VertexSet>) -> Option<Vec<usize>> {
    let cand: Vec<u64> = match within {
        Some(s) => {
            assert_eq!(s.universe(), g.n(), "vertex set from another graph");
            s.bits().to_vec()
        }
        None => VertexSet::full(g.n()).bits().to_vec(),
    };
    let mut out = Vec::with_capacity(t);
    let row = |v: usize| g.row(v);
    bitset::find_clique(&row, &cand, t, &mut out).then_some(out)
}

pub fn is_connected(g: &Graph) -> bool {
    connected_without(g, None)
}

fn connected_without(g: &Graph, removed: Option<usize>) -> bool {
    let n = g.n();
    let alive = n - removed.is_some() as usize;
    if alive == 0 {
        return true;
    }
    let start = (0..n).find(|&v| Some(v) != removed).expect("alive vertex");
    let mut seen = vec![false; n];
    if let Some(r) = removed {
        seen[r] = true;
    }
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for w in g.neighbor_iter(v) {
            if !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == alive
}

/// True iff `g` has at least 3 vertices, is connected, and has no cut vertex.
///
/// Uses the lowpoint recursion of Hopcroft and Tarjan, iteratively.
pub fn is_2connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 || !is_connected(g) {
        return false;
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut timer = 0;
    let mut root_children = 0;
    // (vertex, remaining neighbours to visit)
    let mut stack: Vec<(usize, Vec<usize>)> = Vec::new();
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    stack.push((0, g.neighbor_iter(0).collect()));
    while let Some((v, pending)) = stack.last_mut() {
        let v = *v;
        if let Some(w) = pending.pop() {
            if disc[w] == usize::MAX {
                parent[w] = v;
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                if v == 0 {
                    root_children += 1;
                }
                let next: Vec<usize> = g.neighbor_iter(w).collect();
                stack.push((w, next));
            } else if w != parent[v] {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            let p = parent[v];
            if p != usize::MAX {
                low[p] = low[p].min(low[v]);
                if p != 0 && low[v] >= disc[p] {
                    return false;
                }
            }
        }
    }
    root_children < 2
}

/// Size of a largest independent set of `g[s]`.
pub fn independence_number(g: &Graph, s: &VertexSet) -> usize {
    let comp = g.complement();
    let mut best = 0;
    let mut cand = s.bits().to_vec();
    grow_clique(&comp, &mut cand, 0, &mut best);
    best
}

fn grow_clique(g: &Graph, cand: &mut [u64], size: usize, best: &mut usize) {
    if bitset::is_empty(cand) {
        *best = (*best).max(size);
        return;
    }
    let vs: Vec<usize> = bitset::ones(cand).collect();
    for v in vs {
        if size + bitset::count(cand) <= *best {
            return;
        }
        bitset::clear(cand, v);
        let mut next: Vec<u64> = cand.iter().zip(g.row(v)).map(|(a, b)| a & b).collect();
        grow_clique(g, &mut next, size + 1, best);
    }
    *best = (*best).max(size);
}

/// Hajnal's dichotomy for `K_t`-saturated graphs: a universal vertex, or
/// minimum degree at least `2(t - 2)`.
pub fn hajnal_dichotomy(g: &Graph, t: usize) -> bool {
    let n = g.n();
    n == 0 || g.max_degree() == n - 1 || g.min_degree() >= 2 * t.saturating_sub(2)
}
