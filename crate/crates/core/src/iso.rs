//! Isomorphism and automorphism groups for small graphs by equitable
//! partition refinement with backtracking.

use num_bigint::BigUint;
use thiserror::Error;

use crate::bitset;
use crate::graph::Graph;

/// Largest vertex count accepted by the refinement search.
pub const ISO_CAP: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("graph on {n} vertices is too large for the isomorphism search (cap {cap})")]
pub struct TooLarge {
    pub n: usize,
    pub cap: usize,
}

/// Automorphism group given by generators (permutations `v -> perm[v]`)
/// together with its order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    pub generators: Vec<Vec<usize>>,
    pub order: BigUint,
}

type Cells = Vec<Vec<usize>>;

fn check_cap(g: &Graph) -> Result<(), TooLarge> {
    if g.n() > ISO_CAP {
        Err(TooLarge {
            n: g.n(),
            cap: ISO_CAP,
        })
    } else {
        Ok(())
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Subcells replace their parent in place, ordered by ascending neighbour
/// count, so the result is equivariant under relabeling.
fn refine(g: &Graph, cells: &mut Cells) {
    let words = g.words();
    let mut splitter_bits = vec![0u64; words];
    let mut counts = vec![0usize; g.n()];
    let mut i = 0;
    while i < cells.len() {
        splitter_bits.iter_mut().for_each(|w| *w = 0);
        for &v in &cells[i] {
            bitset::set(&mut splitter_bits, v);
        }
        for (v, c) in counts.iter_mut().enumerate() {
            *c = g
                .row(v)
                .iter()
                .zip(&splitter_bits)
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
        }
        let before = cells.len();
        let mut next: Cells = Vec::with_capacity(before);
        for cell in cells.drain(..) {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            let mut sorted = cell;
            sorted.sort_by_key(|&v| counts[v]);
            let mut start = 0;
            for j in 1..=sorted.len() {
                if j == sorted.len() || counts[sorted[j]] != counts[sorted[start]] {
                    next.push(sorted[start..j].to_vec());
                    start = j;
                }
            }
        }
        *cells = next;
        // Any split can make an earlier splitter informative again.
        i = if cells.len() > before { 0 } else { i + 1 };
    }
}

/// Cell sizes plus the neighbour count of each cell's first vertex into every
/// cell. Equal for corresponding partitions of isomorphic graphs.
fn certificate(g: &Graph, cells: &Cells) -> Vec<usize> {
    let mut cert = Vec::with_capacity(cells.len() * (cells.len() + 1));
    for c in cells {
        cert.push(c.len());
    }
    for c in cells {
        let v = c[0];
        for d in cells {
            cert.push(d.iter().filter(|&&w| g.has_edge(v, w)).count());
        }
    }
    cert
}

fn individualize(cells: &Cells, idx: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, c) in cells.iter().enumerate() {
        if i == idx {
            out.push(vec![v]);
            out.push(c.iter().copied().filter(|&w| w != v).collect());
        } else {
            out.push(c.clone());
        }
    }
    out
}

fn target_cell(cells: &Cells) -> Option<usize> {
    cells.iter().position(|c| c.len() > 1)
}

/// Depth-first search for a bijection `left-cell[i] -> right-cell[i]` that maps
/// edges of `g` onto edges of `h`. Both partitions are refined first.
fn search(g: &Graph, h: &Graph, mut left: Cells, mut right: Cells) -> Option<Vec<usize>> {
    refine(g, &mut left);
    refine(h, &mut right);
    if left.len() != right.len() || certificate(g, &left) != certificate(h, &right) {
        return None;
    }
    match target_cell(&left) {
        None => {
            let mut map = vec![0; g.n()];
            for (l, r) in left.iter().zip(&right) {
                map[l[0]] = r[0];
            }
            g.edges()
                .all(|(u, v)| h.has_edge(map[u], map[v]))
                .then_some(map)
        }
        Some(idx) => {
            let v = left[idx][0];
            let lnext = individualize(&left, idx, v);
            for &w in &right[idx] {
                if let Some(m) = search(g, h, lnext.clone(), individualize(&right, idx, w)) {
                    return Some(m);
                }
            }
            None
        }
    }
}

/// An isomorphism `g -> h` (as `map[v_g] = v_h`) when one exists.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, TooLarge> {
    check_cap(g)?;
    check_cap(h)?;
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(None);
    }
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let unit: Cells = vec![(0..g.n()).collect()];
    Ok(search(g, h, unit.clone(), unit))
}

struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn absorb(&mut self, perm: &[usize]) {
        for (v, &w) in perm.iter().enumerate() {
            let (a, b) = (self.find(v), self.find(w));
            if a != b {
                self.parent[a.max(b)] = a.min(b);
            }
        }
    }
}

/// Generators and order of `Aut(g)`.
///
/// Walks the leftmost path of the individualization tree to fix a base
/// `b_0, b_1, ...`; then, deepest level first, computes the orbit of `b_i`
/// under the pointwise stabilizer of `b_0..b_{i-1}` by searching for one
/// automorphism per new orbit point. The order is the product of the orbit
/// lengths.
pub fn automorphism_group(g: &Graph) -> Result<AutomorphismGroup, TooLarge> {
    check_cap(g)?;
    let n = g.n();
    let mut levels: Vec<(Cells, usize)> = Vec::new();
    let mut cells: Cells = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    refine(g, &mut cells);
    while let Some(idx) = target_cell(&cells) {
        levels.push((cells.clone(), idx));
        let b = cells[idx][0];
        cells = individualize(&cells, idx, b);
        refine(g, &mut cells);
    }

    let mut generators: Vec<Vec<usize>> = Vec::new();
    let mut orbits = Orbits::new(n);
    let mut order = BigUint::from(1u32);
    for (cells, idx) in levels.iter().rev() {
        let base = cells[*idx][0];
        let left = individualize(cells, *idx, base);
        for &w in &cells[*idx][1..] {
            if orbits.find(w) == orbits.find(base) {
                continue;
            }
            if let Some(perm) = search(g, g, left.clone(), individualize(cells, *idx, w)) {
                orbits.absorb(&perm);
                generators.push(perm);
            }
        }
        let root = orbits.find(base);
        let len = cells[*idx]
            .iter()
            .filter(|&&w| orbits.find(w) == root)
            .count();
        order *= BigUint::from(len);
    }
    Ok(AutomorphismGroup { generators, order })
}

/// Sorted degree sequence plus sorted per-vertex triangle counts; a cheap
/// isomorphism invariant used for bucketing.
pub fn invariant_key(g: &Graph) -> Vec<usize> {
    let mut deg = g.degrees();
    let mut tri: Vec<usize> = (0..g.n())
        .map(|v| {
            let nb: Vec<usize> = g.neighbor_iter(v).collect();
            let mut c = 0;
            for (i, &a) in nb.iter().enumerate() {
                for &b in &nb[i + 1..] {
                    c += g.has_edge(a, b) as usize;
                }
            }
            c * g.n() + g.degree(v)
        })
        .collect();
    deg.sort_unstable();
    tri.sort_unstable();
    let mut key = vec![g.n(), g.edge_count()];
    key.extend(deg);
    key.extend(tri);
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_group_orders() {
        let k3 = automorphism_group(&Graph::complete(3)).unwrap();
        assert_eq!(k3.order, BigUint::from(6u32));
        let c5 = automorphism_group(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.order, BigUint::from(10u32));
        let e0 = automorphism_group(&Graph::new(0)).unwrap();
        assert_eq!(e0.order, BigUint::from(1u32));
        let petersen_free = automorphism_group(&Graph::new(20)).unwrap();
        let fact20: BigUint = (1..=20u32).map(BigUint::from).product();
        assert_eq!(petersen_free.order, fact20);
    }

    #[test]
    fn generators_preserve_edges() {
        let g = Graph::complete_bipartite(3, 4);
        let grp = automorphism_group(&g).unwrap();
        assert_eq!(grp.order, BigUint::from(144u32));
        for p in &grp.generators {
            assert_eq!(g.relabel(p), g);
        }
    }

    #[test]
    fn cycle_relabeled() {
        let c5 = Graph::cycle(5);
        let h = c5.relabel(&[3, 0, 4, 1, 2]);
        let m = are_isomorphic(&c5, &h).unwrap().expect("isomorphic");
        assert_eq!(c5.relabel(&m), h);
        assert_eq!(
            are_isomorphic(&Graph::complete_bipartite(3, 3), &Graph::cycle(6)).unwrap(),
            None
        );
        // Same degree sequence, different graphs: C6 vs two triangles.
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_eq!(are_isomorphic(&Graph::cycle(6), &two_k3).unwrap(), None);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(automorphism_group(&Graph::new(65)).is_err());
        assert!(are_isomorphic(&Graph::new(65), &Graph::new(65)).is_err());
    }
}
