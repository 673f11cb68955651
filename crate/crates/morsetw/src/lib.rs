//! IO, formats and the experiment harness on top of `morsetw-core`.

pub mod experiment;
pub mod formats;

use morsetw_core::treewidth::{best_decomposition, heuristic_decomposition};
use morsetw_core::{Graph, TreeDecomposition};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Decomposition of `graph`: exact up to `exact_limit` nodes, otherwise the
/// min-fill heuristic. With a seed the heuristic runs on a random relabelling,
/// which changes its tie-breaking. Returns the decomposition and whether it
/// is exact.
pub fn decompose(graph: &Graph, exact_limit: usize, seed: Option<u64>) -> (TreeDecomposition, bool) {
    let n = graph.node_count();
    match seed {
        Some(seed) if n > exact_limit => {
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
            let td = heuristic_decomposition(&graph.relabeled(&perm));
            let mut inverse = vec![0; n];
            for (i, &p) in perm.iter().enumerate() {
                inverse[p] = i;
            }
            let bags = td.bags().iter().map(|b| b.iter().map(|&v| inverse[v]).collect()).collect();
            (TreeDecomposition::new(bags, td.arcs().to_vec()), false)
        }
        _ => best_decomposition(graph, exact_limit),
    }
}
