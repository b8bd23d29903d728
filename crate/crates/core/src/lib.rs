//! Ramsey arrowing and co-critical graphs for the pair `(K_t, K_{1,k})`.
//!
//! A graph `G` arrows `(K_t, K_{1,k})` when every red/blue coloring of its
//! edges has a red `K_t` or a blue star `K_{1,k}`. A non-complete graph is
//! co-critical when it does not arrow, but adding any missing edge makes it
//! arrow. This crate decides arrowing by propagating backtracking, verifies
//! co-criticality, builds the known sparse co-critical families for
//! `t in {3, 4, 5}` together with their critical colorings, and audits the
//! structure of max-red colorings.

pub mod arrowing;
mod bitset;
pub mod bounds;
pub mod cocritical;
pub mod coloring;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod oracle;
pub mod props;
pub mod report;
pub mod search;

pub use arrowing::{arrows, ramsey_star, ArrowStatus, ArrowVerdict};
pub use coloring::{is_critical, Color, EdgeColoring, PairParams};
pub use engine::{
    enumerate_critical, find_critical, max_red_critical, Enumeration, SearchBudget, SearchOutcome,
    SearchStatus,
};
pub use error::{ColoringError, Graph6Error, GraphError, ParamError};
pub use graph::{Graph, VertexSet};
pub use graph6::{emit_graph6, parse_graph6};

/// Exact rational arithmetic for the edge-count bounds.
pub type Rational = num_rational::Ratio<i64>;
/// Bound value in exact arithmetic.
pub type ExactBound = bounds::Bound<Rational>;
/// Bound value in double precision, for plotting and quick comparisons.
pub type FloatBound = bounds::Bound<f64>;
