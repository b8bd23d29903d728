//! Exhaustive colouring scan, independent of the propagating engine.

use crate::coloring::PairParams;
use crate::error::ColoringError;
use crate::graph::Graph;
use crate::props;

/// Largest edge count [`brute_force_critical`] accepts.
pub const BRUTE_FORCE_EDGE_CAP: usize = 24;

/// Counts critical colorings by testing all `2^e(g)` red/blue assignments.
pub fn brute_force_critical(g: &Graph, p: PairParams) -> Result<u64, ColoringError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let m = edges.len();
    if m > BRUTE_FORCE_EDGE_CAP {
        return Err(ColoringError::TooManyEdges {
            edges: m,
            cap: BRUTE_FORCE_EDGE_CAP,
        });
    }
    let mut count = 0u64;
    let mut blue_deg = vec![0usize; g.n()];
    for mask in 0u64..(1u64 << m) {
        // bit i set = edge i red
        blue_deg.iter_mut().for_each(|d| *d = 0);
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 0 {
                blue_deg[u] += 1;
                blue_deg[v] += 1;
            }
        }
        if blue_deg.iter().any(|&d| d > p.blue_cap()) {
            continue;
        }
        let mut red = Graph::new(g.n());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                red.set_edge(u, v);
            }
        }
        if props::contains_clique(&red, p.t(), None).is_none() {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let p = PairParams::new(3, 3).unwrap();
        assert_eq!(brute_force_critical(&Graph::complete(2), p).unwrap(), 2);
        assert_eq!(brute_force_critical(&Graph::complete(3), p).unwrap(), 7);
        assert_eq!(brute_force_critical(&Graph::new(4), p).unwrap(), 1);
        assert!(brute_force_critical(&Graph::complete(8), p).is_err());
    }
}
