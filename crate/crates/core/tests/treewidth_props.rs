mod common;

use common::*;
use itertools::Itertools;
use morsetw_core::graph::Graph;
use morsetw_core::treewidth::{
    best_decomposition, decomposition_from_ordering, elimination_width, exact_treewidth, heuristic_decomposition,
    make_nice, TreewidthError, DEFAULT_EXACT_LIMIT,
};
use proptest::prelude::*;

fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut arcs = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                arcs.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                arcs.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::new(rows * cols, arcs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn exact_is_minimum_over_orderings(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_non_bipartite(&mut r, 7, 12);
        let (w, td) = exact_treewidth(&g, DEFAULT_EXACT_LIMIT).unwrap();
        let best = (0..g.node_count()).permutations(g.node_count()).map(|o| elimination_width(&g, &o)).min().unwrap();
        prop_assert_eq!(w, best);
        prop_assert_eq!(td.width(), w);
        prop_assert!(td.validate(&g).is_valid());
    }

    #[test]
    fn exact_never_exceeds_heuristic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_bipartite(&mut r, 14, 24);
        let heur = heuristic_decomposition(&g);
        let (w, _) = exact_treewidth(&g, DEFAULT_EXACT_LIMIT).unwrap();
        prop_assert!(heur.validate(&g).is_valid());
        prop_assert!(w <= heur.width());
    }

    #[test]
    fn ordering_decompositions_are_valid(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_non_bipartite(&mut r, 12, 30);
        let order = random_perm(&mut r, g.node_count());
        let td = decomposition_from_ordering(&g, &order);
        prop_assert!(td.validate(&g).is_valid());
        prop_assert_eq!(td.width(), elimination_width(&g, &order));
    }

    #[test]
    fn nice_form_keeps_width_and_coverage(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_bipartite(&mut r, 14, 24);
        let td = decomposition_from_ordering(&g, &random_perm(&mut r, g.node_count()));
        let nice = make_nice(&td).unwrap();
        prop_assert_eq!(nice.width(), td.width());
        prop_assert!(nice.check(g.node_count()).is_ok());
        prop_assert!(nice.bag_count() <= nice.bag_bound(g.node_count()));
        prop_assert!(nice.to_decomposition().validate(&g).is_valid());
    }
}

#[test]
fn known_treewidths() {
    let cases = [
        (Graph::complete(6), 5),
        (Graph::cycle(9), 2),
        (Graph::path(9), 1),
        (grid(3, 3), 3),
        (grid(3, 5), 3),
        (grid(4, 4), 4),
        (Graph::new(1, []).unwrap(), 0),
    ];
    for (g, tw) in cases {
        assert_eq!(exact_treewidth(&g, DEFAULT_EXACT_LIMIT).unwrap().0, tw, "{:?}", g.arcs());
    }
}

#[test]
fn disconnected_graphs_get_one_tree() {
    let g = Graph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap();
    let td = heuristic_decomposition(&g);
    assert!(td.validate(&g).is_valid());
    assert!(make_nice(&td).unwrap().check(6).is_ok());
}

#[test]
fn exact_solver_respects_its_limit() {
    let g = Graph::path(30);
    assert!(matches!(exact_treewidth(&g, DEFAULT_EXACT_LIMIT), Err(TreewidthError::TooLarge { nodes: 30, .. })));
    let (td, exact) = best_decomposition(&g, DEFAULT_EXACT_LIMIT);
    assert!(!exact);
    assert_eq!(td.width(), 1);
}
