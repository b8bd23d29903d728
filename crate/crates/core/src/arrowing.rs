//! Deciding `G -> (K_t, K_{1,k})`.

use crate::coloring::{EdgeColoring, PairParams};
use crate::engine::{find_critical, SearchBudget, SearchStatus};
use crate::error::ParamError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowStatus {
    /// Every coloring has a red `K_t` or a blue `K_{1,k}`.
    Arrows,
    /// A critical coloring exists; it is carried as the witness.
    NotArrows(EdgeColoring),
    /// The budget ran out first.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowVerdict {
    pub status: ArrowStatus,
    pub nodes: u64,
}

impl ArrowVerdict {
    pub fn label(&self) -> &'static str {
        match self.status {
            ArrowStatus::Arrows => "Arrows",
            ArrowStatus::NotArrows(_) => "NotArrows",
            ArrowStatus::Unknown => "Unknown",
        }
    }

    pub fn arrows(&self) -> bool {
        self.status == ArrowStatus::Arrows
    }
}

pub fn arrows(g: &Graph, p: PairParams, budget: SearchBudget) -> ArrowVerdict {
    let out = find_critical(g, p, budget);
    let status = match out.status {
        SearchStatus::Found(c) => ArrowStatus::NotArrows(c),
        SearchStatus::NoneExists => ArrowStatus::Arrows,
        SearchStatus::Exhausted => ArrowStatus::Unknown,
    };
    ArrowVerdict {
        status,
        nodes: out.nodes_explored,
    }
}

/// Chvátal's value `r(K_t, K_{1,k}) = (t - 1)k + 1`.
pub fn ramsey_star(t: usize, k: usize) -> Result<usize, ParamError> {
    let p = PairParams::new(t, k)?;
    Ok((p.t() - 1) * p.k() + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_critical;

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey_star(3, 3), Ok(7));
        assert_eq!(ramsey_star(4, 3), Ok(10));
        assert!(ramsey_star(2, 5).is_err());
        assert!(ramsey_star(5, 1).is_err());
    }

    #[test]
    fn complete_graphs_at_the_threshold() {
        let p = PairParams::new(3, 3).unwrap();
        let b = SearchBudget::unlimited();
        assert!(arrows(&Graph::complete(7), p, b).arrows());
        let v = arrows(&Graph::complete(6), p, b);
        match &v.status {
            ArrowStatus::NotArrows(w) => assert!(is_critical(&Graph::complete(6), w, p).unwrap()),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            arrows(&Graph::new(4), p, b).status,
            ArrowStatus::NotArrows(_)
        ));
    }
}
