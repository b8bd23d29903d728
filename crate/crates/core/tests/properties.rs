mod common;

use cocrit::cocritical::is_kt_saturated;
use cocrit::iso::{are_isomorphic, automorphism_group};
use cocrit::oracle::brute_force_critical;
use cocrit::props::{contains_clique, hajnal_dichotomy, is_2connected};
use cocrit::{
    arrows, emit_graph6, enumerate_critical, is_critical, max_red_critical, parse_graph6, Graph,
    PairParams, SearchBudget,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let edges: Vec<_> = pairs(n)
                    .into_iter()
                    .zip(bits)
                    .filter_map(|(e, b)| b.then_some(e))
                    .collect();
                Graph::from_edges(n, &edges).unwrap()
            },
        )
    })
}

/// Graphs with at most `max_edges` edges.
fn arb_sparse(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        let all = pairs(n);
        let cap = max_edges.min(all.len());
        subsequence(all, 0..=cap).prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

fn arb_pair() -> impl Strategy<Value = PairParams> {
    prop_oneof![Just((3, 3)), Just((3, 4)), Just((4, 3))]
        .prop_map(|(t, k)| PairParams::new(t, k).unwrap())
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn graph6_round_trip(g in arb_graph(0, 64)) {
        let s = emit_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn complement_is_an_involution(g in arb_graph(0, 40)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * g.n().saturating_sub(1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn clique_search_matches_brute_force(g in arb_graph(0, 9), t in 2usize..6) {
        let found = contains_clique(&g, t, None);
        prop_assert_eq!(found.is_some(), common::has_clique(&common::matrix(&g), t));
        if let Some(c) = found {
            prop_assert_eq!(c.len(), t);
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    prop_assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn two_connectivity_matches_brute_force(g in arb_graph(0, 10)) {
        prop_assert_eq!(is_2connected(&g), common::is_2connected(&common::matrix(&g)));
    }

    #[test]
    fn saturation_matches_brute_force(g in arb_graph(2, 7), t in 3usize..5) {
        prop_assert_eq!(is_kt_saturated(&g, t), common::is_saturated(&common::matrix(&g), t));
    }

    #[test]
    fn isomorphism_matches_brute_force(g in arb_graph(1, 7), h in arb_graph(1, 7)) {
        let fast = are_isomorphic(&g, &h).unwrap();
        prop_assert_eq!(fast.is_some(), common::isomorphic(&g, &h));
        if let Some(map) = fast {
            prop_assert_eq!(g.relabel(&map), h);
        }
    }

    #[test]
    fn relabeled_graphs_are_isomorphic(
        (g, perm) in arb_graph(1, 30).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) })
    ) {
        let h = g.relabel(&perm);
        let map = are_isomorphic(&g, &h).unwrap().expect("relabeling is an isomorphism");
        prop_assert_eq!(g.relabel(&map), h);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn automorphism_order_matches_brute_force(g in arb_graph(0, 7)) {
        let group = automorphism_group(&g).unwrap();
        prop_assert_eq!(group.order, BigUint::from(common::automorphism_count(&g)));
        for p in &group.generators {
            prop_assert_eq!(&g.relabel(p), &g);
        }
    }

    #[test]
    fn engine_matches_brute_force(g in arb_sparse(8, 12), p in arb_pair()) {
        let brute = common::critical_count(&g, p.t(), p.k());
        prop_assert_eq!(brute_force_critical(&g, p).unwrap(), brute);
        let e = enumerate_critical(&g, p, usize::MAX, SearchBudget::unlimited());
        prop_assert!(e.complete);
        prop_assert_eq!(e.colorings.len() as u64, brute);
        for c in &e.colorings {
            prop_assert!(is_critical(&g, c, p).unwrap());
        }
        let v = arrows(&g, p, SearchBudget::unlimited());
        prop_assert_eq!(v.arrows(), brute == 0);
    }

    #[test]
    fn counts_are_relabeling_invariant(
        (g, perm) in arb_sparse(8, 12).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) }),
        p in arb_pair(),
    ) {
        let count = |h: &Graph| enumerate_critical(h, p, usize::MAX, SearchBudget::unlimited()).colorings.len();
        prop_assert_eq!(count(&g), count(&g.relabel(&perm)));
        let best = |h: &Graph| max_red_critical(h, p, SearchBudget::unlimited()).witness().map(|c| c.red_count());
        prop_assert_eq!(best(&g), best(&g.relabel(&perm)));
    }

    #[test]
    fn arrowing_is_monotone(g in arb_graph(2, 9), p in arb_pair()) {
        let base = arrows(&g, p, SearchBudget::unlimited());
        if base.arrows() {
            for (u, v) in g.non_edges() {
                prop_assert!(arrows(&g.add_edge(u, v).unwrap(), p, SearchBudget::unlimited()).arrows());
            }
        } else {
            for (u, v) in g.edges() {
                prop_assert!(!arrows(&g.remove_edge(u, v).unwrap(), p, SearchBudget::unlimited()).arrows());
            }
        }
    }

    #[test]
    fn max_red_is_maximum(g in arb_sparse(7, 11), p in arb_pair()) {
        let all = enumerate_critical(&g, p, usize::MAX, SearchBudget::unlimited());
        let best = all.colorings.iter().map(|c| c.red_count()).max();
        let found = max_red_critical(&g, p, SearchBudget::unlimited());
        prop_assert_eq!(found.witness().map(|c| c.red_count()), best);
    }
}

#[test]
fn hajnal_holds_on_small_saturated_graphs() {
    for n in 3..=6 {
        let m = n * (n - 1) / 2;
        for mask in 0u64..1 << m {
            let g = common::graph_from_mask(n, mask);
            for t in 3..=4 {
                if is_kt_saturated(&g, t) {
                    assert!(hajnal_dichotomy(&g, t), "{} t={t}", emit_graph6(&g));
                }
            }
        }
    }
}
