mod common;

use common::*;
use morsetw_core::morse::{
    complete_matching_3manifold, erasability_via_acfm, optimal_morse_3manifold, optimal_morse_3manifold_with,
    validate_morse_matching, MorseError,
};
use morsetw_core::{is_alternating_cycle_free, AcfmError, Graph, Simplex, SimplicialComplex, SolveOptions};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Whether the Hasse diagram with the given arcs reversed has a directed
/// cycle, by depth-first search over the whole diagram.
fn naive_has_cycle(k: &SimplicialComplex, pairs: &[(Simplex, Simplex)]) -> bool {
    let h = k.hasse_diagram();
    let n = h.node_count();
    let mut out = vec![Vec::new(); n];
    for &(a, b) in h.arcs() {
        let matched = pairs.contains(&(h.simplices()[a], h.simplices()[b]));
        if matched {
            out[b].push(a);
        } else {
            out[a].push(b);
        }
    }
    fn visit(v: usize, out: &[Vec<usize>], state: &mut [u8]) -> bool {
        state[v] = 1;
        for &w in &out[v] {
            if state[w] == 1 || (state[w] == 0 && visit(w, out, state)) {
                return true;
            }
        }
        state[v] = 2;
        false
    }
    let mut state = vec![0u8; n];
    (0..n).any(|v| state[v] == 0 && visit(v, &out, &mut state))
}

/// Fewest critical simplexes over all acyclic matchings of the Hasse diagram.
fn brute_force_morse(k: &SimplicialComplex) -> usize {
    let h = k.hasse_diagram();
    let arcs: Vec<(Simplex, Simplex)> = h.arcs().iter().map(|&(a, b)| (h.simplices()[a], h.simplices()[b])).collect();
    let total = h.node_count();
    let mut best = total;
    let mut chosen = Vec::new();
    let mut used = std::collections::BTreeSet::new();
    fn go(
        i: usize,
        arcs: &[(Simplex, Simplex)],
        k: &SimplicialComplex,
        total: usize,
        chosen: &mut Vec<(Simplex, Simplex)>,
        used: &mut std::collections::BTreeSet<Simplex>,
        best: &mut usize,
    ) {
        if naive_has_cycle(k, chosen) {
            return;
        }
        *best = (*best).min(total - 2 * chosen.len());
        if i == arcs.len() || total - 2 * (chosen.len() + (arcs.len() - i)).min(total / 2) >= *best {
            return;
        }
        for j in i..arcs.len() {
            let (a, b) = arcs[j];
            if used.contains(&a) || used.contains(&b) {
                continue;
            }
            used.insert(a);
            used.insert(b);
            chosen.push((a, b));
            go(j + 1, arcs, k, total, chosen, used, best);
            chosen.pop();
            used.remove(&a);
            used.remove(&b);
        }
    }
    go(0, &arcs, k, total, &mut chosen, &mut used, &mut best);
    best
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn level_check_agrees_with_whole_diagram(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_2complex(&mut r, 8);
        let h = k.hasse_diagram();
        let mut pairs = Vec::new();
        let mut used = std::collections::BTreeSet::new();
        for &(a, b) in h.arcs() {
            let (tau, sigma) = (h.simplices()[a], h.simplices()[b]);
            if r.random_bool(0.4) && !used.contains(&tau) && !used.contains(&sigma) {
                used.insert(tau);
                used.insert(sigma);
                pairs.push((tau, sigma));
            }
        }
        let check = validate_morse_matching(&k, &pairs).unwrap();
        prop_assert!(check.reused.is_none());
        prop_assert_eq!(check.acyclic, !naive_has_cycle(&k, &pairs));
        prop_assert_eq!(check.critical.iter().sum::<usize>(), h.node_count() - 2 * pairs.len());
    }

    #[test]
    fn erasability_certificate_erases(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_2complex(&mut r, 12);
        let e = erasability_via_acfm(&k).unwrap();
        prop_assert_eq!(e.critical.len(), e.er);
        let rest: Vec<Vec<u32>> =
            k.triangles().iter().filter(|t| !e.critical.contains(t)).map(|t| t.vertices().to_vec()).collect();
        if !rest.is_empty() {
            prop_assert!(SimplicialComplex::new(rest).unwrap().erase_greedy().unwrap().erasable);
        }
    }
}

#[test]
fn sphere_gets_a_perfect_matching() {
    let k = pentachoron_boundary();
    let r = optimal_morse_3manifold(&k).unwrap();
    assert_eq!(r.matching.critical(), [1, 0, 0, 1]);
    let check = validate_morse_matching(&k, r.matching.pairs()).unwrap();
    assert!(check.is_valid() && !naive_has_cycle(&k, r.matching.pairs()));
}

#[test]
fn table_limit_stops_the_pipeline() {
    let options = SolveOptions { class_limit: Some(10), ..SolveOptions::default() };
    let err = optimal_morse_3manifold_with(&pentachoron_boundary(), &options).unwrap_err();
    assert!(matches!(err, MorseError::Acfm(AcfmError::TableLimit { limit: 10, .. })));
}

/// A maximal cycle-free spine matching grown from arcs in random order.
fn random_cycle_free(spine: &Graph, r: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    let mut arcs = spine.arcs().to_vec();
    arcs.shuffle(r);
    let mut m: Vec<(usize, usize)> = Vec::new();
    for a in arcs {
        m.push(a);
        if !is_alternating_cycle_free(spine, &m).unwrap_or(false) {
            m.pop();
        }
    }
    m
}

#[test]
fn completion_of_any_cycle_free_spine_matching() {
    let mut r = rng(23);
    for (name, k) in closed_3manifolds() {
        let spine = k.spine();
        for _ in 0..5 {
            let full = random_cycle_free(&spine, &mut r);
            let keep: Vec<(usize, usize)> = full.iter().copied().filter(|_| r.random_bool(0.8)).collect();
            let m = complete_matching_3manifold(&k, &keep).unwrap();
            let c = m.critical();
            assert_eq!((c[0], c[3]), (1, 1), "{name}");
            assert_eq!(c[1], c[2], "{name}");
            let e = k.edges().len() as isize;
            let v = k.vertices().len() as isize;
            assert_eq!(m.total_critical() as isize, 2 + 2 * (e - v + 1 - keep.len() as isize), "{name}");
            assert!(!naive_has_cycle(&k, m.pairs()), "{name}");
        }
    }
}

#[test]
fn brute_force_optimum_on_small_complexes() {
    assert_eq!(brute_force_morse(&single_triangle()), 1);
    assert_eq!(brute_force_morse(&tetra_boundary()), 2);
    assert_eq!(erasability_via_acfm(&single_triangle()).unwrap().er, 0);
    assert_eq!(erasability_via_acfm(&tetra_boundary()).unwrap().er, 1);
}

#[test]
fn wrong_dimensions_are_rejected() {
    assert_eq!(optimal_morse_3manifold(&tetra_boundary()).unwrap_err(), MorseError::NotClosed3Manifold);
    assert_eq!(erasability_via_acfm(&pentachoron_boundary()).unwrap_err(), MorseError::NotDimension2);
    let k = pentachoron_boundary();
    assert_eq!(complete_matching_3manifold(&k, &[(0, 10), (1, 10)]).unwrap_err(), MorseError::SpinePairsNotCycleFree);
}
