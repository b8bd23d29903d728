//! Brute-force oracles written against adjacency matrices only, so they share
//! no code with the library they check.

#![allow(dead_code, clippy::needless_range_loop)]

use cocrit::Graph;

pub type Matrix = Vec<Vec<bool>>;

pub fn matrix(g: &Graph) -> Matrix {
    let n = g.n();
    (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

pub fn from_matrix(a: &Matrix) -> Graph {
    let n = a.len();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if a[u][v] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Graph from a bit mask over the pairs `(0,1), (0,2), .., (n-2,n-1)`.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn extend_clique(a: &Matrix, chosen: &mut Vec<usize>, from: usize, size: usize) -> bool {
    if chosen.len() == size {
        return true;
    }
    for v in from..a.len() {
        if chosen.iter().all(|&u| a[u][v]) {
            chosen.push(v);
            if extend_clique(a, chosen, v + 1, size) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

pub fn has_clique(a: &Matrix, size: usize) -> bool {
    extend_clique(a, &mut Vec::new(), 0, size)
}

pub fn is_saturated(a: &Matrix, t: usize) -> bool {
    if has_clique(a, t) {
        return false;
    }
    let n = a.len();
    let mut b = a.clone();
    for u in 0..n {
        for v in u + 1..n {
            if !a[u][v] {
                b[u][v] = true;
                b[v][u] = true;
                let closes = has_clique(&b, t);
                b[u][v] = false;
                b[v][u] = false;
                if !closes {
                    return false;
                }
            }
        }
    }
    true
}

fn connected_without(a: &Matrix, skip: Option<usize>) -> bool {
    let n = a.len();
    let Some(start) = (0..n).find(|&v| Some(v) != skip) else {
        return true;
    };
    let mut seen = vec![false; n];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if a[u][v] && !seen[v] && Some(v) != skip {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    (0..n).all(|v| seen[v] || Some(v) == skip)
}

pub fn is_2connected(a: &Matrix) -> bool {
    a.len() >= 3
        && connected_without(a, None)
        && (0..a.len()).all(|v| connected_without(a, Some(v)))
}

/// Critical colorings by scanning all `2^m` assignments.
pub fn critical_count(g: &Graph, t: usize, k: usize) -> u64 {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20);
    let mut count = 0;
    for mask in 0u64..1 << edges.len() {
        let mut red = vec![vec![false; n]; n];
        let mut blue_deg = vec![0; n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                red[u][v] = true;
                red[v][u] = true;
            } else {
                blue_deg[u] += 1;
                blue_deg[v] += 1;
            }
        }
        if blue_deg.iter().all(|&d| d < k) && !has_clique(&red, t) {
            count += 1;
        }
    }
    count
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(&p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn preserves(a: &Matrix, b: &Matrix, p: &[usize]) -> bool {
    let n = a.len();
    (0..n).all(|u| (u + 1..n).all(|v| a[u][v] == b[p[u]][p[v]]))
}

pub fn automorphism_count(g: &Graph) -> u64 {
    let a = matrix(g);
    let mut count = 0;
    for_each_permutation(g.n(), |p| {
        if preserves(&a, &a, p) {
            count += 1;
        }
    });
    count
}

pub fn isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let (a, b) = (matrix(g), matrix(h));
    let mut found = false;
    for_each_permutation(g.n(), |p| {
        if !found && preserves(&a, &b, p) {
            found = true;
        }
    });
    found
}
