//! Red/blue edge colorings and the `(K_t, K_{1,k})` target pair.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ColoringError, ParamError};
use crate::graph::Graph;
use crate::props;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Blue => 'B',
        }
    }
}

/// The pair `(K_t, K_{1,k})` with `t >= 3` and `k >= 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairParams {
    t: usize,
    k: usize,
}

impl PairParams {
    pub fn new(t: usize, k: usize) -> Result<Self, ParamError> {
        if t < 3 {
            return Err(ParamError::range("t", t, ">= 3"));
        }
        if k < 3 {
            return Err(ParamError::range("k", k, ">= 3"));
        }
        Ok(PairParams { t, k })
    }

    /// Clique order of the red target.
    pub fn t(&self) -> usize {
        self.t
    }

    /// Leaf count of the blue star.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest blue degree a critical coloring may have.
    pub fn blue_cap(&self) -> usize {
        self.k - 1
    }
}

/// A total red/blue coloring of the edges of a host graph.
///
/// Edges are stored as `(u, v)` with `u < v` in lexicographic order, matching
/// [`Graph::edges`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<Color>,
}

impl EdgeColoring {
    /// Colors every edge of `g` by `f(u, v)`.
    pub fn from_fn(g: &Graph, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let edges: Vec<_> = g.edges().collect();
        let colors = edges.iter().map(|&(u, v)| f(u, v)).collect();
        EdgeColoring {
            n: g.n(),
            edges,
            colors,
        }
    }

    pub fn uniform(g: &Graph, c: Color) -> Self {
        Self::from_fn(g, |_, _| c)
    }

    /// Builds a coloring from colors listed in `g.edges()` order.
    pub fn from_colors(g: &Graph, colors: Vec<Color>) -> Result<Self, ColoringError> {
        let edges: Vec<_> = g.edges().collect();
        if edges.len() != colors.len() {
            return Err(ColoringError::HostMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        Ok(EdgeColoring {
            n: g.n(),
            edges,
            colors,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), Color)> + '_ {
        self.edges.iter().copied().zip(self.colors.iter().copied())
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colors[i])
    }

    pub fn set(&mut self, u: usize, v: usize, c: Color) -> bool {
        let key = (u.min(v), u.max(v));
        match self.edges.binary_search(&key) {
            Ok(i) => {
                self.colors[i] = c;
                true
            }
            Err(_) => false,
        }
    }

    pub fn red_count(&self) -> usize {
        self.colors.iter().filter(|&&c| c == Color::Red).count()
    }

    /// Spanning subgraph of one color class.
    pub fn subgraph(&self, c: Color) -> Graph {
        let mut g = Graph::new(self.n);
        for ((u, v), col) in self.iter() {
            if col == c {
                g.set_edge(u, v);
            }
        }
        g
    }

    pub fn red_graph(&self) -> Graph {
        self.subgraph(Color::Red)
    }

    pub fn blue_graph(&self) -> Graph {
        self.subgraph(Color::Blue)
    }

    /// Errors unless this coloring covers exactly the edges of `g`.
    pub fn check_host(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.n != g.n() {
            return Err(ColoringError::HostMismatch(format!(
                "coloring on {} vertices, graph on {}",
                self.n,
                g.n()
            )));
        }
        if self.edges.len() != g.edge_count() || self.edges.iter().any(|&(u, v)| !g.has_edge(u, v))
        {
            return Err(ColoringError::HostMismatch("edge sets differ".to_string()));
        }
        Ok(())
    }

    /// Text form: one `u v R|B` line per edge, lexicographic.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for ((u, v), c) in self.iter() {
            s.push_str(&format!("{u} {v} {}\n", c.letter()));
        }
        s
    }

    pub fn lines(&self) -> Vec<String> {
        self.iter()
            .map(|((u, v), c)| format!("{u} {v} {}", c.letter()))
            .collect()
    }

    /// Parses the text form against host `g`; every edge must appear once.
    pub fn parse_text(g: &Graph, text: &str) -> Result<Self, ColoringError> {
        let mut coloring = EdgeColoring::uniform(g, Color::Red);
        let mut seen = vec![false; coloring.len()];
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| ColoringError::Parse {
                line: idx + 1,
                msg: msg.to_string(),
            };
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 3 {
                return Err(err("expected `u v R|B`"));
            }
            let u = usize::from_str(parts[0]).map_err(|_| err("bad vertex"))?;
            let v = usize::from_str(parts[1]).map_err(|_| err("bad vertex"))?;
            let c = match parts[2] {
                "R" => Color::Red,
                "B" => Color::Blue,
                _ => return Err(err("color must be R or B")),
            };
            let key = (u.min(v), u.max(v));
            let i = coloring
                .edges
                .binary_search(&key)
                .map_err(|_| err("not an edge of the host graph"))?;
            if seen[i] {
                return Err(err("edge listed twice"));
            }
            seen[i] = true;
            coloring.colors[i] = c;
        }
        if let Some(i) = seen.iter().position(|s| !s) {
            let (u, v) = coloring.edges[i];
            return Err(ColoringError::HostMismatch(format!(
                "edge {u}-{v} uncolored"
            )));
        }
        Ok(coloring)
    }
}

impl fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeColoring[")?;
        for (i, ((u, v), c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}{}{v}", c.letter().to_ascii_lowercase())?;
        }
        write!(f, "]")
    }
}

/// No red `K_t`.
pub fn red_is_kt_free(c: &EdgeColoring, p: PairParams) -> bool {
    props::contains_clique(&c.red_graph(), p.t(), None).is_none()
}

/// Blue maximum degree at most `k - 1` (no blue `K_{1,k}`).
pub fn blue_is_star_free(c: &EdgeColoring, p: PairParams) -> bool {
    c.blue_graph().max_degree() <= p.blue_cap()
}

/// Whether `c` is a critical coloring of `g` for `p`.
pub fn is_critical(g: &Graph, c: &EdgeColoring, p: PairParams) -> Result<bool, ColoringError> {
    c.check_host(g)?;
    Ok(blue_is_star_free(c, p) && red_is_kt_free(c, p))
}
