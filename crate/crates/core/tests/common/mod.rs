//! Instance generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::HashSet;

use itertools::Itertools;
use morsetw_core::graph::{Graph, Side};
use morsetw_core::SimplicialComplex;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// Connected graphs up to isomorphism on `1..=max_n` nodes.
///
/// Every connected graph has a node whose removal keeps it connected, so
/// level `n` is produced by attaching a new node to a non-empty subset of
/// each level `n - 1` graph, then deduplicating by canonical form.
pub fn all_connected_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    assert!((1..=8).contains(&max_n));
    let mut levels: Vec<Vec<[u8; 8]>> = vec![vec![[0; 8]]];
    for n in 2..=max_n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for rows in &levels[n - 2] {
            for subset in 1u8..(1 << (n - 1)) {
                let mut g = *rows;
                g[n - 1] = subset;
                for v in 0..n - 1 {
                    if subset & (1 << v) != 0 {
                        g[v] |= 1 << (n - 1);
                    }
                }
                let code = canonical_code(&g, n);
                if seen.insert(code) {
                    next.push(g);
                }
            }
        }
        levels.push(next);
    }
    levels
        .iter()
        .enumerate()
        .map(|(i, gs)| gs.iter().map(|rows| rows_to_graph(rows, i + 1)).collect())
        .collect()
}

fn rows_to_graph(rows: &[u8; 8], n: usize) -> Graph {
    let arcs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| rows[u] & (1 << v) != 0);
    Graph::new(n, arcs).unwrap()
}

/// Minimum adjacency code over the orderings compatible with colour
/// refinement, which is an isomorphism invariant.
fn canonical_code(rows: &[u8; 8], n: usize) -> u64 {
    let mut color: Vec<usize> = (0..n).map(|v| rows[v].count_ones() as usize).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| rows[v] & (1 << u) != 0).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut distinct = sigs.clone();
        distinct.sort();
        distinct.dedup();
        let refined: Vec<usize> = sigs.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = distinct_count(&color);
        color = refined;
        if distinct_count(&color) == before {
            break;
        }
    }
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for c in color.iter().copied().sorted().dedup() {
        cells.push((0..n).filter(|&v| color[v] == c).collect());
    }
    let mut best = u64::MAX;
    let perms: Vec<Vec<Vec<usize>>> = cells.iter().map(|c| c.iter().copied().permutations(c.len()).collect()).collect();
    for choice in perms.iter().multi_cartesian_product() {
        let order: Vec<usize> = choice.into_iter().flatten().copied().collect();
        let mut code = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if rows[order[i]] & (1 << order[j]) != 0 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    }
    best
}

fn distinct_count(c: &[usize]) -> usize {
    c.iter().collect::<std::collections::BTreeSet<_>>().len()
}

/// Random bipartite graph with at most `max_nodes` nodes and `max_arcs`
/// arcs; the partition is attached half of the time.
pub fn random_bipartite(rng: &mut ChaCha8Rng, max_nodes: usize, max_arcs: usize) -> Graph {
    let n = rng.random_range(2..=max_nodes);
    let a = rng.random_range(1..n);
    let mut candidates: Vec<(usize, usize)> = (0..a).flat_map(|u| (a..n).map(move |v| (u, v))).collect();
    candidates.shuffle(rng);
    let m = rng.random_range(1..=max_arcs.min(candidates.len()));
    candidates.truncate(m);
    let perm = random_perm(rng, n);
    let g = Graph::new(n, candidates).unwrap();
    let g = if rng.random_bool(0.5) {
        let sides = (0..n).map(|v| if v < a { Side::One } else { Side::Two }).collect();
        g.with_partition(sides).unwrap()
    } else {
        g
    };
    g.relabeled(&perm)
}

/// Random graph containing an odd cycle.
pub fn random_non_bipartite(rng: &mut ChaCha8Rng, max_nodes: usize, max_arcs: usize) -> Graph {
    loop {
        let n = rng.random_range(3..=max_nodes);
        let mut candidates: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
        candidates.shuffle(rng);
        let m = rng.random_range(3..=max_arcs.min(candidates.len()));
        candidates.truncate(m);
        let g = Graph::new(n, candidates).unwrap();
        if !g.is_bipartite() {
            return g;
        }
    }
}

pub fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn single_triangle() -> SimplicialComplex {
    SimplicialComplex::new([[0, 1, 2]]).unwrap()
}

pub fn tetra_boundary() -> SimplicialComplex {
    SimplicialComplex::new([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap()
}

pub fn two_tetra_boundaries() -> SimplicialComplex {
    SimplicialComplex::new([
        [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3],
        [4, 5, 6], [4, 5, 7], [4, 6, 7], [5, 6, 7],
    ])
    .unwrap()
}

pub fn octahedron() -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for &a in &[0, 5] {
        for (b, c) in [(1, 2), (2, 3), (3, 4), (4, 1)] {
            out.push([a, b, c]);
        }
    }
    out
}

pub fn pentachoron_boundary() -> SimplicialComplex {
    SimplicialComplex::new((0..5u32).combinations(4)).unwrap()
}

/// Random pure 2-complex with at most `max_triangles` triangles: either
/// uniform triangles on few vertices, or a closed surface piece with extra
/// triangles attached.
pub fn random_2complex(rng: &mut ChaCha8Rng, max_triangles: usize) -> SimplicialComplex {
    let mut tris: Vec<[u32; 3]> = match rng.random_range(0..3) {
        0 => Vec::new(),
        1 => vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]],
        _ => octahedron(),
    };
    for t in &mut tris {
        t.sort_unstable();
    }
    tris.shuffle(rng);
    tris.truncate(rng.random_range(tris.len().saturating_sub(1)..=tris.len()));
    let v = rng.random_range(4..=7u32);
    let mut all: Vec<[u32; 3]> = (0..v).combinations(3).map(|c| [c[0], c[1], c[2]]).collect();
    all.shuffle(rng);
    let target = rng.random_range(1..=max_triangles);
    for t in all {
        if tris.len() >= target {
            break;
        }
        if !tris.contains(&t) {
            tris.push(t);
        }
    }
    SimplicialComplex::new(tris).unwrap()
}

/// Boundary of the 4-simplex after `moves` random subdivisions of a
/// tetrahedron by a new interior vertex.
pub fn stacked_sphere(rng: &mut ChaCha8Rng, moves: usize) -> SimplicialComplex {
    let mut tets: Vec<[u32; 4]> = (0..5u32).combinations(4).map(|c| [c[0], c[1], c[2], c[3]]).collect();
    let mut next = 5;
    for _ in 0..moves {
        let t = tets.swap_remove(rng.random_range(0..tets.len()));
        for skip in 0..4 {
            let mut f: Vec<u32> = t.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
            f.push(next);
            tets.push([f[0], f[1], f[2], f[3]]);
        }
        next += 1;
    }
    SimplicialComplex::new(tets).unwrap()
}

/// Join of the boundaries of an `m`-gon and an `n`-gon: a 3-sphere.
pub fn polygon_join(m: u32, n: u32) -> SimplicialComplex {
    let mut tets = Vec::new();
    for i in 0..m {
        for j in 0..n {
            tets.push([i, (i + 1) % m, m + j, m + (j + 1) % n]);
        }
    }
    SimplicialComplex::new(tets).unwrap()
}

/// Suspension of a triangulated 2-sphere.
pub fn suspension(surface: &[[u32; 3]]) -> SimplicialComplex {
    let apex = surface.iter().flatten().max().unwrap() + 1;
    let tets = surface.iter().flat_map(|t| [[t[0], t[1], t[2], apex], [t[0], t[1], t[2], apex + 1]]);
    SimplicialComplex::new(tets.collect::<Vec<_>>()).unwrap()
}

/// Closed 3-manifold test complexes of modest spine size.
pub fn closed_3manifolds() -> Vec<(String, SimplicialComplex)> {
    let mut out = vec![
        ("pentachoron".to_string(), pentachoron_boundary()),
        ("join33".to_string(), polygon_join(3, 3)),
        ("join34".to_string(), polygon_join(3, 4)),
        ("suspended-tetra".to_string(), suspension(&[[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])),
        ("suspended-octa".to_string(), suspension(&octahedron())),
    ];
    let mut r = rng(7);
    for moves in 1..=3 {
        out.push((format!("stacked{moves}"), stacked_sphere(&mut r, moves)));
    }
    out
}

/// 3-dimensional complexes (closed and with boundary) whose edge stars are
/// connected through triangles.
pub fn manifold_3complexes() -> Vec<(String, SimplicialComplex)> {
    let mut out = closed_3manifolds();
    out.push(("tetrahedron".to_string(), SimplicialComplex::new([[0, 1, 2, 3]]).unwrap()));
    out.push(("glued-pair".to_string(), SimplicialComplex::new([[0, 1, 2, 3], [0, 1, 2, 4]]).unwrap()));
    let mut r = rng(11);
    for moves in [2, 4, 6, 8] {
        let s = stacked_sphere(&mut r, moves);
        let rest: Vec<usize> = (1..s.tetrahedra().len()).collect();
        out.push((format!("stacked-ball{moves}"), s.subcomplex(&rest).unwrap()));
        out.push((format!("stacked{moves}"), s));
    }
    out
}
