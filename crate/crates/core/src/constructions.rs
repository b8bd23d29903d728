//! Sparse co-critical graphs for `t in {3, 4, 5}` with their critical
//! colorings, and the two-hub graphs `J` classifying `K_3`-saturated graphs of
//! minimum degree 2.
//!
//! Vertex numbering is fixed: `A` first, then the `B` blocks, the `C` blocks,
//! `R` (regular part first, the isolated vertex last when `epsilon = 1`), and
//! finally the special vertices (`x, y, z` for `t = 3`; `x_1.., y_1..`
//! otherwise).

use serde::{Deserialize, Serialize};

use crate::bounds::{check_construction_params, epsilon};
use crate::coloring::{Color, EdgeColoring};
use crate::error::ParamError;
use crate::graph::Graph;

/// A named, half-open range of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub name: String,
    pub start: usize,
    pub end: usize,
}

impl Block {
    pub fn vertices(&self) -> Vec<usize> {
        (self.start..self.end).collect()
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionPlan {
    pub t: usize,
    pub k: usize,
    pub n: usize,
    pub epsilon: usize,
    pub layout: Vec<Block>,
}

impl ConstructionPlan {
    pub fn block(&self, name: &str) -> Option<&Block> {
        self.layout.iter().find(|b| b.name == name)
    }
}

/// A construction together with its critical coloring `sigma`.
#[derive(Debug, Clone)]
pub struct Construction {
    pub graph: Graph,
    pub sigma: EdgeColoring,
    pub plan: ConstructionPlan,
}

struct Layout {
    blocks: Vec<Block>,
    next: usize,
}

impl Layout {
    fn new() -> Self {
        Layout {
            blocks: Vec::new(),
            next: 0,
        }
    }

    fn take(&mut self, name: impl Into<String>, len: usize) -> Vec<usize> {
        let start = self.next;
        self.next += len;
        self.blocks.push(Block {
            name: name.into(),
            start,
            end: self.next,
        });
        (start..self.next).collect()
    }
}

/// `d`-regular circulant on `m` vertices: connections `±1..±floor(d/2)`, plus
/// the antipode `m/2` when `d` is odd.
pub fn circulant_regular(m: usize, d: usize) -> Result<Graph, ParamError> {
    if d >= m && !(m == 0 && d == 0) {
        return Err(ParamError::Invalid(format!(
            "degree {d} needs more than {m} vertices"
        )));
    }
    if !(d * m).is_multiple_of(2) {
        return Err(ParamError::Invalid(format!(
            "no {d}-regular graph on {m} vertices (odd degree sum)"
        )));
    }
    let mut g = Graph::new(m);
    for v in 0..m {
        for j in 1..=d / 2 {
            g.set_edge(v, (v + j) % m);
        }
        if d % 2 == 1 {
            g.set_edge(v, (v + m / 2) % m);
        }
    }
    Ok(g)
}

/// `d`-regular bipartite graph with sides `0..parts` and `parts..2*parts`,
/// `b_i ~ c_{(i + j) mod parts}` for `j < d`.
pub fn regular_bipartite(parts: usize, d: usize) -> Result<Graph, ParamError> {
    if d > parts {
        return Err(ParamError::Invalid(format!(
            "degree {d} exceeds side size {parts}"
        )));
    }
    let mut g = Graph::new(2 * parts);
    for i in 0..parts {
        for j in 0..d {
            g.set_edge(i, parts + (i + j) % parts);
        }
    }
    Ok(g)
}

/// Copies `h` onto the vertices `at` of `g`.
fn embed(g: &mut Graph, h: &Graph, at: &[usize]) {
    for (u, v) in h.edges() {
        g.set_edge(at[u], at[v]);
    }
}

/// `R`: a `(k-1)`-regular circulant, plus an isolated vertex when `eps = 1`.
fn place_r(g: &mut Graph, r: &[usize], k: usize, eps: usize) -> Result<(), ParamError> {
    let reg = &r[..r.len() - eps];
    embed(g, &circulant_regular(reg.len(), k - 1)?, reg);
    Ok(())
}

fn color_blue_inside(g: &Graph, c: &mut EdgeColoring, vs: &[usize]) {
    for (i, &u) in vs.iter().enumerate() {
        for &v in &vs[i + 1..] {
            if g.has_edge(u, v) {
                c.set(u, v, Color::Blue);
            }
        }
    }
}

fn color_blue_between(c: &mut EdgeColoring, a: &[usize], b: &[usize]) {
    for &u in a {
        for &v in b {
            c.set(u, v, Color::Blue);
        }
    }
}

/// The `t = 3` graph on `n >= 4k + 1` vertices.
pub fn build_t3(k: usize, n: usize) -> Result<Construction, ParamError> {
    check_construction_params(3, k, n)?;
    let eps = epsilon(k, n);
    let mut lay = Layout::new();
    let a = lay.take("A", k - 1);
    let b = lay.take("B", k - 1);
    let c = lay.take("C", k - 1);
    let r = lay.take("R", n - 3 * k);
    let x = lay.take("x", 1)[0];
    let y = lay.take("y", 1)[0];
    let z = lay.take("z", 1)[0];
    debug_assert_eq!(lay.next, n);

    let mut g = Graph::new(n);
    g.make_clique(&a);
    let h = regular_bipartite(k - 1, k - 2)?;
    let bc: Vec<usize> = b.iter().chain(&c).copied().collect();
    embed(&mut g, &h, &bc);
    place_r(&mut g, &r, k, eps)?;
    g.join(a.iter().copied(), &b);
    let g1: Vec<usize> = a.iter().chain(&b).chain(&c).chain(&r).copied().collect();
    g.join([x, y], &g1);
    g.set_edge(y, z);
    let ac: Vec<usize> = a.iter().chain(&c).copied().collect();
    g.join([z], &ac);

    let mut sigma = EdgeColoring::uniform(&g, Color::Red);
    color_blue_inside(&g, &mut sigma, &a);
    color_blue_inside(&g, &mut sigma, &bc);
    color_blue_inside(&g, &mut sigma, &r);
    color_blue_between(&mut sigma, &[x], &b);
    color_blue_between(&mut sigma, &[y], &a);
    color_blue_between(&mut sigma, &[z], &c);

    Ok(Construction {
        graph: g,
        sigma,
        plan: ConstructionPlan {
            t: 3,
            k,
            n,
            epsilon: eps,
            layout: lay.blocks,
        },
    })
}

/// The `t in {4, 5}` graph on `n >= (2t - 2)k + 1` vertices.
pub fn build_t45(t: usize, k: usize, n: usize) -> Result<Construction, ParamError> {
    if t != 4 && t != 5 {
        return Err(ParamError::range("t", t, "4 or 5"));
    }
    check_construction_params(t, k, n)?;
    let eps = epsilon(k, n);
    let s = t - 2;
    let mut lay = Layout::new();
    let a = lay.take("A", k);
    let bs: Vec<Vec<usize>> = (1..=s).map(|i| lay.take(format!("B{i}"), k - 1)).collect();
    let cs: Vec<Vec<usize>> = (1..=s).map(|i| lay.take(format!("C{i}"), k - 1)).collect();
    let r = lay.take("R", n - (2 * t - 3) * k);
    let xs: Vec<usize> = (1..=s).map(|i| lay.take(format!("x{i}"), 1)[0]).collect();
    let ys: Vec<usize> = (1..=s).map(|i| lay.take(format!("y{i}"), 1)[0]).collect();
    debug_assert_eq!(lay.next, n);

    let mut g = Graph::new(n);
    g.make_clique(&a);
    for blk in bs.iter().chain(&cs) {
        g.make_clique(blk);
    }
    for i in 0..s {
        g.join(bs[i].iter().copied(), &a);
        g.join(bs[i].iter().copied(), &cs[i]);
        for j in i + 1..s {
            g.join(bs[i].iter().copied(), &bs[j]);
        }
    }
    place_r(&mut g, &r, k, eps)?;
    let h_no_a: Vec<usize> = bs.iter().chain(&cs).flatten().copied().collect();
    let h_all: Vec<usize> = a.iter().chain(&h_no_a).copied().collect();
    for i in 0..s {
        g.join([xs[i]], &h_all);
        g.join([xs[i]], &r);
        g.join([ys[i]], &h_no_a);
        g.join([ys[i]], &r);
        for j in 0..s {
            if j != i {
                g.set_edge(xs[i], xs[j]);
                g.set_edge(ys[i], xs[j]);
            }
        }
    }

    let mut sigma = EdgeColoring::uniform(&g, Color::Red);
    color_blue_inside(&g, &mut sigma, &a);
    for blk in bs.iter().chain(&cs) {
        color_blue_inside(&g, &mut sigma, blk);
    }
    color_blue_inside(&g, &mut sigma, &r);
    for i in 0..s {
        color_blue_between(&mut sigma, &[xs[i]], &bs[i]);
        color_blue_between(&mut sigma, &[ys[i]], &cs[i]);
    }

    Ok(Construction {
        graph: g,
        sigma,
        plan: ConstructionPlan {
            t,
            k,
            n,
            epsilon: eps,
            layout: lay.blocks,
        },
    })
}

/// Dispatches to [`build_t3`] or [`build_t45`].
pub fn build(t: usize, k: usize, n: usize) -> Result<Construction, ParamError> {
    check_construction_params(t, k, n)?;
    if t == 3 {
        build_t3(k, n)
    } else {
        build_t45(t, k, n)
    }
}

/// Block sizes of the two-hub graph `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JParams {
    a: usize,
    b: usize,
    c: usize,
}

impl JParams {
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self, ParamError> {
        if a == 0 {
            return Err(ParamError::range("a", a, ">= 1"));
        }
        if (b == 0) != (c == 0) {
            return Err(ParamError::Invalid(
                "b and c must be both zero or both positive".into(),
            ));
        }
        Ok(JParams { a, b, c })
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn order(&self) -> usize {
        self.a + self.b + self.c + 2
    }

    /// All valid parameter triples on `n` vertices.
    pub fn all_of_order(n: usize) -> Vec<JParams> {
        let mut out = Vec::new();
        let Some(inner) = n.checked_sub(2) else {
            return out;
        };
        for a in 1..=inner {
            let rest = inner - a;
            if rest == 0 {
                out.push(JParams { a, b: 0, c: 0 });
            }
            for b in 1..rest {
                out.push(JParams { a, b, c: rest - b });
            }
        }
        out
    }
}

/// `J`: independent blocks `A, B, C` with `B` complete to `C`, and hubs
/// `y ~ A ∪ B`, `z ~ A ∪ C`. Vertices are `A, B, C, y, z` in that order.
pub fn build_j(p: JParams) -> Graph {
    let (a, b, c) = (p.a, p.b, p.c);
    let n = p.order();
    let av: Vec<usize> = (0..a).collect();
    let bv: Vec<usize> = (a..a + b).collect();
    let cv: Vec<usize> = (a + b..a + b + c).collect();
    let (y, z) = (n - 2, n - 1);
    let mut g = Graph::new(n);
    g.join(bv.iter().copied(), &cv);
    g.join([y], &av);
    g.join([y], &bv);
    g.join([z], &av);
    g.join([z], &cv);
    g
}
