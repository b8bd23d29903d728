//! Propagating backtracking search over red/blue edge colorings.
//!
//! A coloring is critical for `(K_t, K_{1,k})` when the red graph has no `K_t`
//! and every blue degree is at most `k - 1`. The engine assigns edges in a
//! static most-constrained-first order, tries red before blue, and after every
//! assignment propagates two rules to a fixpoint:
//!
//! * a vertex whose blue degree reached `k - 1` forces its remaining edges red;
//! * an edge whose endpoints have a red `K_{t-2}` among their common red
//!   neighbours forces blue.
//!
//! A red edge closing a red `K_t`, or a blue edge overflowing a blue degree,
//! is a conflict and triggers backtracking.

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::bitset;
use crate::coloring::{Color, EdgeColoring, PairParams};
use crate::error::ParamError;
use crate::graph::Graph;

/// Cooperative limits for a single search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    node_limit: u64,
    wall_limit: Duration,
}

impl SearchBudget {
    pub fn new(node_limit: u64, wall_limit: Duration) -> Result<Self, ParamError> {
        if node_limit == 0 {
            return Err(ParamError::range("node_limit", 0, ">= 1"));
        }
        if wall_limit.is_zero() {
            return Err(ParamError::Invalid("wall_limit must be positive".into()));
        }
        Ok(SearchBudget {
            node_limit,
            wall_limit,
        })
    }

    pub fn unlimited() -> Self {
        SearchBudget {
            node_limit: u64::MAX,
            wall_limit: Duration::from_secs(u64::MAX / 4),
        }
    }

    pub fn nodes(node_limit: u64) -> Self {
        SearchBudget {
            node_limit: node_limit.max(1),
            ..Self::unlimited()
        }
    }

    pub fn node_limit(&self) -> u64 {
        self.node_limit
    }

    pub fn wall_limit(&self) -> Duration {
        self.wall_limit
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self::unlimited()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStatus {
    Found(EdgeColoring),
    NoneExists,
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub nodes_explored: u64,
}

impl SearchOutcome {
    pub fn witness(&self) -> Option<&EdgeColoring> {
        match &self.status {
            SearchStatus::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Result of [`enumerate_critical`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub colorings: Vec<EdgeColoring>,
    /// The search space was exhausted: `colorings` is every critical coloring.
    pub complete: bool,
    /// Stopped because `limit` colorings were collected.
    pub hit_limit: bool,
    pub nodes_explored: u64,
}

const UNSET: u8 = 0;
const RED: u8 = 1;
const BLUE: u8 = 2;
const NO_EDGE: u32 = u32::MAX;
const WALL_CHECK_MASK: u64 = 1023;

enum Mode {
    First,
    All { limit: usize },
    MaxRed,
    AtLeastRed { min: usize, limit: usize },
}

#[derive(PartialEq, Eq)]
enum Flow {
    Continue,
    Stop,
}

struct Engine<'g> {
    g: &'g Graph,
    words: usize,
    clique: usize,
    cap: u32,
    edges: Vec<(usize, usize)>,
    eid: Vec<u32>,
    order: Vec<u32>,
    color: Vec<u8>,
    red: Vec<u64>,
    blue: Vec<u64>,
    blue_deg: Vec<u32>,
    red_count: usize,
    assigned: usize,
    trail: Vec<u32>,
    queue: Vec<u32>,
    queued: Vec<bool>,
    scratch: Vec<u64>,
    clique_buf: Vec<usize>,
    nodes: u64,
    budget: SearchBudget,
    started: Instant,
    exhausted: bool,
    mode: Mode,
    best_red: Option<usize>,
    found: Vec<Vec<Color>>,
}

impl<'g> Engine<'g> {
    fn new(g: &'g Graph, p: PairParams, budget: SearchBudget, mode: Mode) -> Self {
        let n = g.n();
        let words = g.words();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        let mut eid = vec![NO_EDGE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            eid[u * n + v] = i as u32;
            eid[v * n + u] = i as u32;
        }
        let mut order: Vec<u32> = (0..edges.len() as u32).collect();
        order.sort_by_key(|&e| {
            let (u, v) = edges[e as usize];
            std::cmp::Reverse(g.degree(u) + g.degree(v))
        });
        let m = edges.len();
        Engine {
            g,
            words,
            clique: p.t() - 2,
            cap: p.blue_cap() as u32,
            edges,
            eid,
            order,
            color: vec![UNSET; m],
            red: vec![0; n * words],
            blue: vec![0; n * words],
            blue_deg: vec![0; n],
            red_count: 0,
            assigned: 0,
            trail: Vec::with_capacity(m),
            queue: Vec::new(),
            queued: vec![false; m],
            scratch: vec![0; words],
            clique_buf: Vec::new(),
            nodes: 0,
            budget,
            started: Instant::now(),
            exhausted: false,
            mode,
            best_red: None,
            found: Vec::new(),
        }
    }

    /// Is there a red `K_{t-2}` inside `N_r(u) ∩ N_r(v)`?
    fn red_clique_between(&mut self, u: usize, v: usize) -> bool {
        let w = self.words;
        if w == 1 {
            let common = self.red[u] & self.red[v];
            let red = &self.red;
            return bitset::has_clique_64(&|x: usize| red[x], common, self.clique);
        }
        for i in 0..w {
            self.scratch[i] = self.red[u * w + i] & self.red[v * w + i];
        }
        self.clique_buf.clear();
        let red = &self.red;
        let row = |x: usize| &red[x * w..(x + 1) * w];
        bitset::find_clique(&row, &self.scratch, self.clique, &mut self.clique_buf)
    }

    fn push_queue(&mut self, e: u32) {
        if !self.queued[e as usize] {
            self.queued[e as usize] = true;
            self.queue.push(e);
        }
    }

    /// Enqueues the uncolored edges at `x`, or only those towards `among`.
    fn enqueue_at(&mut self, x: usize, among: Option<&[u64]>) {
        let n = self.g.n();
        let w = self.words;
        for i in 0..w {
            let mut word = self.g.row(x)[i] & !self.red[x * w + i] & !self.blue[x * w + i];
            if let Some(mask) = among {
                word &= mask[i];
            }
            while word != 0 {
                let y = i * 64 + word.trailing_zeros() as usize;
                word &= word - 1;
                let e = self.eid[x * n + y];
                self.push_queue(e);
            }
        }
    }

    fn assign(&mut self, e: u32, c: u8) -> bool {
        let cur = self.color[e as usize];
        if cur != UNSET {
            return cur == c;
        }
        let (u, v) = self.edges[e as usize];
        let w = self.words;
        if c == RED {
            if self.red_clique_between(u, v) {
                return false;
            }
            self.color[e as usize] = RED;
            bitset::set(&mut self.red[u * w..(u + 1) * w], v);
            bitset::set(&mut self.red[v * w..(v + 1) * w], u);
            self.red_count += 1;
            self.assigned += 1;
            self.trail.push(e);
            self.enqueue_at(u, None);
            self.enqueue_at(v, None);
            if self.clique >= 2 {
                let common: Vec<u64> = (0..w)
                    .map(|i| self.red[u * w + i] & self.red[v * w + i])
                    .collect();
                for x in bitset::ones(&common) {
                    self.enqueue_at(x, Some(&common));
                }
            }
        } else {
            if self.blue_deg[u] >= self.cap || self.blue_deg[v] >= self.cap {
                return false;
            }
            self.color[e as usize] = BLUE;
            bitset::set(&mut self.blue[u * w..(u + 1) * w], v);
            bitset::set(&mut self.blue[v * w..(v + 1) * w], u);
            self.blue_deg[u] += 1;
            self.blue_deg[v] += 1;
            self.assigned += 1;
            self.trail.push(e);
            if self.blue_deg[u] == self.cap {
                self.enqueue_at(u, None);
            }
            if self.blue_deg[v] == self.cap {
                self.enqueue_at(v, None);
            }
        }
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(e) = self.queue.pop() {
            self.queued[e as usize] = false;
            if self.color[e as usize] != UNSET {
                continue;
            }
            let (x, y) = self.edges[e as usize];
            let must_red = self.blue_deg[x] >= self.cap || self.blue_deg[y] >= self.cap;
            let must_blue = self.red_clique_between(x, y);
            let ok = match (must_red, must_blue) {
                (true, true) => false,
                (true, false) => self.assign(e, RED),
                (false, true) => self.assign(e, BLUE),
                (false, false) => true,
            };
            if !ok {
                self.clear_queue();
                return false;
            }
        }
        true
    }

    fn clear_queue(&mut self) {
        for e in self.queue.drain(..) {
            self.queued[e as usize] = false;
        }
    }

    fn undo(&mut self, mark: usize) {
        let w = self.words;
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("trail entry") as usize;
            let (u, v) = self.edges[e];
            if self.color[e] == RED {
                bitset::clear(&mut self.red[u * w..(u + 1) * w], v);
                bitset::clear(&mut self.red[v * w..(v + 1) * w], u);
                self.red_count -= 1;
            } else {
                bitset::clear(&mut self.blue[u * w..(u + 1) * w], v);
                bitset::clear(&mut self.blue[v * w..(v + 1) * w], u);
                self.blue_deg[u] -= 1;
                self.blue_deg[v] -= 1;
            }
            self.color[e] = UNSET;
            self.assigned -= 1;
        }
    }

    fn over_budget(&mut self) -> bool {
        if self.nodes > self.budget.node_limit
            || (self.nodes & WALL_CHECK_MASK == 0
                && self.started.elapsed() > self.budget.wall_limit)
        {
            self.exhausted = true;
        }
        self.exhausted
    }

    fn prune_by_bound(&self) -> bool {
        let reachable = self.red_count + (self.edges.len() - self.assigned);
        match self.mode {
            Mode::MaxRed => self.best_red.is_some_and(|b| reachable <= b),
            Mode::AtLeastRed { min, .. } => reachable < min,
            _ => false,
        }
    }

    fn leaf(&mut self) -> Flow {
        let colors: Vec<Color> = self
            .color
            .iter()
            .map(|&c| if c == RED { Color::Red } else { Color::Blue })
            .collect();
        match self.mode {
            Mode::First => {
                self.found.push(colors);
                Flow::Stop
            }
            Mode::All { limit } | Mode::AtLeastRed { limit, .. } => {
                self.found.push(colors);
                if self.found.len() >= limit {
                    Flow::Stop
                } else {
                    Flow::Continue
                }
            }
            Mode::MaxRed => {
                self.best_red = Some(self.red_count);
                self.found.clear();
                self.found.push(colors);
                if self.red_count == self.edges.len() {
                    Flow::Stop
                } else {
                    Flow::Continue
                }
            }
        }
    }

    fn dfs(&mut self, mut pos: usize) -> Flow {
        self.nodes += 1;
        if self.over_budget() {
            return Flow::Stop;
        }
        if self.prune_by_bound() {
            return Flow::Continue;
        }
        while pos < self.order.len() && self.color[self.order[pos] as usize] != UNSET {
            pos += 1;
        }
        if pos == self.order.len() {
            return self.leaf();
        }
        let e = self.order[pos];
        for c in [RED, BLUE] {
            let mark = self.trail.len();
            if self.assign(e, c) && self.propagate() && self.dfs(pos + 1) == Flow::Stop {
                return Flow::Stop;
            }
            self.clear_queue();
            self.undo(mark);
        }
        Flow::Continue
    }

    fn run(&mut self) {
        if self.propagate() {
            self.dfs(0);
        }
    }

    fn to_coloring(&self, colors: Vec<Color>) -> EdgeColoring {
        EdgeColoring::from_colors(self.g, colors).expect("engine colors every edge")
    }
}

/// Searches for one critical coloring of `g`.
pub fn find_critical(g: &Graph, p: PairParams, budget: SearchBudget) -> SearchOutcome {
    let mut eng = Engine::new(g, p, budget, Mode::First);
    eng.run();
    let status = if let Some(colors) = eng.found.pop() {
        SearchStatus::Found(eng.to_coloring(colors))
    } else if eng.exhausted {
        SearchStatus::Exhausted
    } else {
        SearchStatus::NoneExists
    };
    SearchOutcome {
        status,
        nodes_explored: eng.nodes,
    }
}

/// Lists critical colorings of `g`, stopping after `limit` of them.
pub fn enumerate_critical(
    g: &Graph,
    p: PairParams,
    limit: usize,
    budget: SearchBudget,
) -> Enumeration {
    if limit == 0 {
        return Enumeration {
            colorings: Vec::new(),
            complete: false,
            hit_limit: true,
            nodes_explored: 0,
        };
    }
    collect(Engine::new(g, p, budget, Mode::All { limit }), limit)
}

fn collect(mut eng: Engine<'_>, limit: usize) -> Enumeration {
    eng.run();
    let hit_limit = eng.found.len() >= limit;
    let found = std::mem::take(&mut eng.found);
    let colorings = found.into_iter().map(|c| eng.to_coloring(c)).collect();
    Enumeration {
        colorings,
        complete: !eng.exhausted && !hit_limit,
        hit_limit,
        nodes_explored: eng.nodes,
    }
}

/// A critical coloring with the largest number of red edges.
pub fn max_red_critical(g: &Graph, p: PairParams, budget: SearchBudget) -> SearchOutcome {
    let mut eng = Engine::new(g, p, budget, Mode::MaxRed);
    eng.run();
    let status = if eng.exhausted {
        SearchStatus::Exhausted
    } else if let Some(colors) = eng.found.pop() {
        SearchStatus::Found(eng.to_coloring(colors))
    } else {
        SearchStatus::NoneExists
    };
    SearchOutcome {
        status,
        nodes_explored: eng.nodes,
    }
}

/// Every critical coloring with at least `min_red` red edges (up to `limit`).
/// With `min_red` equal to the optimum this lists all max-red colorings.
pub fn enumerate_red_at_least(
    g: &Graph,
    p: PairParams,
    min_red: usize,
    limit: usize,
    budget: SearchBudget,
) -> Enumeration {
    collect(
        Engine::new(
            g,
            p,
            budget,
            Mode::AtLeastRed {
                min: min_red,
                limit: limit.max(1),
            },
        ),
        limit.max(1),
    )
}
