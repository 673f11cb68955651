mod common;

use common::*;
use morsetw_core::acfm::{brute_force_acfm, is_alternating_cycle_free, max_acfm, solve, unmatched_side_one, AcfmError};
use morsetw_core::graph::Graph;
use morsetw_core::treewidth::{decomposition_from_ordering, make_nice, DEFAULT_EXACT_LIMIT};
use proptest::prelude::*;

fn is_matching(g: &Graph, m: &[(usize, usize)]) -> bool {
    let mut used = vec![false; g.node_count()];
    m.iter().all(|&(u, v)| {
        let fresh = g.has_arc(u, v) && !used[u] && !used[v];
        used[u] = true;
        used[v] = true;
        fresh
    })
}

/// Maximum matching of a forest by repeatedly matching a leaf to its parent.
fn forest_matching(g: &Graph) -> usize {
    let n = g.node_count();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut size = 0;
    loop {
        let Some(leaf) = (0..n).find(|&v| alive[v] && deg[v] == 1) else { break };
        let parent = g.neighbors(leaf).iter().copied().find(|&u| alive[u]).unwrap();
        size += 1;
        for x in [leaf, parent] {
            alive[x] = false;
            for &y in g.neighbors(x) {
                if alive[y] {
                    deg[y] -= 1;
                }
            }
        }
    }
    size
}

fn random_tree(seed: u64, n: usize) -> Graph {
    let mut r = rng(seed);
    let perm = random_perm(&mut r, n);
    let arcs = (1..n).map(|v| (perm[v], perm[rand::Rng::random_range(&mut r, 0..v)]));
    Graph::new(n, arcs).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn dp_matches_oracle_on_bipartite_graphs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_bipartite(&mut r, 12, 18);
        let td = decomposition_from_ordering(&g, &random_perm(&mut r, g.node_count()));
        let sol = max_acfm(&g, &make_nice(&td).unwrap()).unwrap();
        let oracle = brute_force_acfm(&g).unwrap();
        prop_assert_eq!(sol.size, oracle.size);
        prop_assert!(is_matching(&g, &sol.witness));
        prop_assert!(is_alternating_cycle_free(&g, &sol.witness).unwrap());
        prop_assert_eq!(sol.unmatched_side_one, unmatched_side_one(&g, &sol.witness));
    }

    #[test]
    fn dp_matches_oracle_on_non_bipartite_graphs(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_non_bipartite(&mut r, 9, 20);
        let td = decomposition_from_ordering(&g, &random_perm(&mut r, g.node_count()));
        let sol = max_acfm(&g, &make_nice(&td).unwrap()).unwrap();
        prop_assert_eq!(sol.size, brute_force_acfm(&g).unwrap().size);
        prop_assert!(is_alternating_cycle_free(&g, &sol.witness).unwrap());
    }

    #[test]
    fn size_is_invariant_under_relabelling(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_bipartite(&mut r, 10, 14);
        let h = g.relabeled(&random_perm(&mut r, g.node_count()));
        prop_assert_eq!(solve(&g, DEFAULT_EXACT_LIMIT).unwrap().size, solve(&h, DEFAULT_EXACT_LIMIT).unwrap().size);
    }

    #[test]
    fn trees_reach_maximum_matching(seed in any::<u64>(), n in 1usize..16) {
        let g = random_tree(seed, n);
        prop_assert_eq!(solve(&g, DEFAULT_EXACT_LIMIT).unwrap().size, forest_matching(&g));
    }

    #[test]
    fn oracle_witness_is_cycle_free(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = random_non_bipartite(&mut r, 8, 14);
        let w = brute_force_acfm(&g).unwrap().witness;
        prop_assert!(is_matching(&g, &w));
        prop_assert!(is_alternating_cycle_free(&g, &w).unwrap());
    }
}

#[test]
fn solution_is_deterministic() {
    let mut r = rng(17);
    for _ in 0..30 {
        let g = random_bipartite(&mut r, 12, 18);
        assert_eq!(solve(&g, DEFAULT_EXACT_LIMIT).unwrap(), solve(&g, DEFAULT_EXACT_LIMIT).unwrap());
    }
}

#[test]
fn complete_bipartite_graphs_admit_one_arc() {
    for n in 1..=5 {
        let arcs = (0..n).flat_map(|u| (n..2 * n).map(move |v| (u, v)));
        let g = Graph::new(2 * n, arcs).unwrap();
        assert_eq!(solve(&g, DEFAULT_EXACT_LIMIT).unwrap().size, 1, "K_{n},{n}");
    }
}

#[test]
fn paths_and_cycles() {
    for n in 2..=12 {
        assert_eq!(solve(&Graph::path(n), DEFAULT_EXACT_LIMIT).unwrap().size, n / 2);
        assert_eq!(solve(&Graph::cycle(n.max(3)), DEFAULT_EXACT_LIMIT).unwrap().size, (n.max(3) - 1) / 2);
    }
}

#[test]
fn checker_rejects_non_matchings() {
    let g = Graph::path(3);
    assert_eq!(is_alternating_cycle_free(&g, &[(0, 1), (1, 2)]), Err(AcfmError::NotAMatching));
    assert_eq!(is_alternating_cycle_free(&g, &[(0, 2)]), Err(AcfmError::NotAMatching));
}

#[test]
fn oracle_refuses_large_graphs() {
    assert!(matches!(brute_force_acfm(&Graph::complete(8)), Err(AcfmError::TooLarge { .. })));
}
