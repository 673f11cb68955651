//! Morse matchings: validation, completion of spine matchings on closed
//! 3-manifolds, and the optimal-matching and erasability pipelines.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::acfm::{self, AcfmError, AcfmSolution, SolveOptions};
use crate::complex::{Simplex, SimplicialComplex, TriangleSystem};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MorseError {
    #[error("simplex {0} is not in the complex")]
    NotInComplex(Simplex),
    #[error("{1} is not a codimension-1 face of {0}")]
    NotCodimensionOne(Simplex, Simplex),
    #[error("pairs do not form a matching: {0} is used twice")]
    NotAMatching(Simplex),
    #[error("matched Hasse diagram has a directed cycle")]
    Cyclic,
    #[error("complex is not closed: some triangle does not lie in exactly two tetrahedra")]
    NotClosed3Manifold,
    #[error("operation needs a 2-dimensional complex")]
    NotDimension2,
    #[error("spine pairs are not an alternating cycle-free matching of the spine")]
    SpinePairsNotCycleFree,
    #[error("the {0} graph left by the spine matching is disconnected")]
    DisconnectedGamma(&'static str),
    #[error("completed matching failed validation")]
    CompletionInvalid,
    #[error("erasure certificate failed verification")]
    CertificateInvalid,
    #[error(transparent)]
    Acfm(#[from] AcfmError),
}

/// A validated Morse matching: pairs `(tau, sigma)` with `sigma` a facet of
/// `tau`, and the per-dimension counts of unmatched (critical) simplexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseMatching {
    pairs: Vec<(Simplex, Simplex)>,
    critical: Vec<usize>,
}

impl MorseMatching {
    /// Validate `pairs` against `complex`.
    pub fn new(complex: &SimplicialComplex, pairs: Vec<(Simplex, Simplex)>) -> Result<Self, MorseError> {
        let check = validate_morse_matching(complex, &pairs)?;
        if let Some(s) = check.reused {
            return Err(MorseError::NotAMatching(s));
        }
        if !check.acyclic {
            return Err(MorseError::Cyclic);
        }
        let mut pairs = pairs;
        pairs.sort_unstable();
        Ok(Self { pairs, critical: check.critical })
    }

    pub fn pairs(&self) -> &[(Simplex, Simplex)] {
        &self.pairs
    }

    /// `c_0, ..., c_dim`.
    pub fn critical(&self) -> &[usize] {
        &self.critical
    }

    pub fn total_critical(&self) -> usize {
        self.critical.iter().sum()
    }
}

/// Outcome of [`validate_morse_matching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseCheck {
    /// A simplex occurring in two pairs, if any.
    pub reused: Option<Simplex>,
    /// Whether the diagram with matched arcs reversed is acyclic.
    pub acyclic: bool,
    /// Unmatched simplexes per dimension.
    pub critical: Vec<usize>,
}

impl MorseCheck {
    pub fn is_valid(&self) -> bool {
        self.reused.is_none() && self.acyclic
    }
}

/// Check that `pairs` is a matching on the Hasse diagram whose reversal
/// leaves it acyclic, and count critical simplexes.
///
/// A directed cycle in the reversed diagram moves up only along matched
/// arcs, and two consecutive up-steps would need a simplex matched twice,
/// so every cycle stays between two adjacent dimensions. Each such level is
/// checked on its own.
pub fn validate_morse_matching(
    complex: &SimplicialComplex,
    pairs: &[(Simplex, Simplex)],
) -> Result<MorseCheck, MorseError> {
    let dim = complex.dim();
    let mut used: Vec<Vec<bool>> = (0..=dim).map(|d| vec![false; complex.faces(d).len()]).collect();
    let mut reused = None;
    let mut mate_up: Vec<Vec<Option<usize>>> = (0..=dim).map(|d| vec![None; complex.faces(d).len()]).collect();
    for &(tau, sigma) in pairs {
        let ti = complex.index_of(&tau).ok_or(MorseError::NotInComplex(tau))?;
        let si = complex.index_of(&sigma).ok_or(MorseError::NotInComplex(sigma))?;
        if tau.dim() != sigma.dim() + 1 || !tau.contains(&sigma) {
            return Err(MorseError::NotCodimensionOne(tau, sigma));
        }
        for (s, d, i) in [(tau, tau.dim(), ti), (sigma, sigma.dim(), si)] {
            if used[d][i] && reused.is_none() {
                reused = Some(s);
            }
            used[d][i] = true;
        }
        mate_up[sigma.dim()][si] = Some(ti);
    }
    let critical = used.iter().map(|u| u.iter().filter(|&&x| !x).count()).collect();
    let acyclic = reused.is_some() || (0..dim).all(|d| level_acyclic(complex, d, &mate_up[d]));
    Ok(MorseCheck { reused, acyclic: reused.is_none() && acyclic, critical })
}

/// Acyclicity of the level between dimensions `d` and `d + 1`, by Kahn's
/// algorithm. Lower simplexes are nodes `0..a`, upper ones `a..a+b`.
fn level_acyclic(complex: &SimplicialComplex, d: usize, mate_up: &[Option<usize>]) -> bool {
    let lower = complex.faces(d);
    let upper = complex.faces(d + 1);
    let a = lower.len();
    let n = a + upper.len();
    let mut succ = vec![Vec::new(); n];
    for (ti, tau) in upper.iter().enumerate() {
        for sigma in tau.facets() {
            let si = lower.binary_search(&sigma).expect("faces are closed");
            if mate_up[si] == Some(ti) {
                succ[si].push(a + ti);
            } else {
                succ[a + ti].push(si);
            }
        }
    }
    kahn_acyclic(&succ)
}

fn kahn_acyclic(succ: &[Vec<usize>]) -> bool {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for list in succ {
        for &w in list {
            indeg[w] += 1;
        }
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    seen == n
}

/// Acyclicity of the whole reversed Hasse diagram in one search, without the
/// per-level argument. `pairs` must be a valid matching.
pub fn whole_diagram_acyclic(complex: &SimplicialComplex, pairs: &[(Simplex, Simplex)]) -> bool {
    let h = complex.hasse_diagram();
    let mut succ = vec![Vec::new(); h.node_count()];
    let matched: Vec<(usize, usize)> = pairs
        .iter()
        .map(|(t, s)| (h.node_of(t).expect("in complex"), h.node_of(s).expect("in complex")))
        .collect();
    for &(t, s) in h.arcs() {
        if matched.contains(&(t, s)) {
            succ[s].push(t);
        } else {
            succ[t].push(s);
        }
    }
    kahn_acyclic(&succ)
}

/// Complete an alternating cycle-free spine matching of a closed
/// 3-manifold to a Morse matching with one critical vertex and one critical
/// tetrahedron.
///
/// `spine_arcs` are spine node pairs. Vertices are matched along a
/// breadth-first spanning tree of the edges left unmatched, rooted at the
/// lowest vertex; tetrahedra along a spanning tree of the dual graph through
/// unmatched triangles, rooted at the lowest tetrahedron.
pub fn complete_matching_3manifold(
    complex: &SimplicialComplex,
    spine_arcs: &[(usize, usize)],
) -> Result<MorseMatching, MorseError> {
    if !complex.is_closed_3_pseudomanifold() {
        return Err(MorseError::NotClosed3Manifold);
    }
    let spine = complex.spine();
    match acfm::is_alternating_cycle_free(&spine, spine_arcs) {
        Ok(true) => {}
        _ => return Err(MorseError::SpinePairsNotCycleFree),
    }
    let t = complex.triangles().len();
    let mut edge_used = vec![false; complex.edges().len()];
    let mut tri_used = vec![false; t];
    let mut pairs = Vec::new();
    for &(a, b) in spine_arcs {
        let (tri, edge) = if a < t { (a, b - t) } else { (b, a - t) };
        tri_used[tri] = true;
        edge_used[edge] = true;
        pairs.push((complex.triangles()[tri], complex.edges()[edge]));
    }

    // Primal side: vertices joined by unmatched edges.
    let verts = complex.vertices();
    let mut adj = vec![Vec::new(); verts.len()];
    for (ei, e) in complex.edges().iter().enumerate() {
        if edge_used[ei] {
            continue;
        }
        let [u, v] = [e.vertices()[0], e.vertices()[1]].map(|x| {
            verts.binary_search(&Simplex::new(&[x]).expect("vertex")).expect("vertex of complex")
        });
        adj[u].push((v, ei));
        adj[v].push((u, ei));
    }
    for (child, via) in bfs_tree(&mut adj).ok_or(MorseError::DisconnectedGamma("primal"))? {
        pairs.push((complex.edges()[via], verts[child]));
    }

    // Dual side: tetrahedra joined by unmatched triangles.
    let mut adj = vec![Vec::new(); complex.tetrahedra().len()];
    for (ti, cof) in complex.triangle_cofaces().iter().enumerate() {
        if tri_used[ti] {
            continue;
        }
        adj[cof[0]].push((cof[1], ti));
        adj[cof[1]].push((cof[0], ti));
    }
    for (child, via) in bfs_tree(&mut adj).ok_or(MorseError::DisconnectedGamma("dual"))? {
        pairs.push((complex.tetrahedra()[child], complex.triangles()[via]));
    }

    MorseMatching::new(complex, pairs).map_err(|_| MorseError::CompletionInvalid)
}

/// Breadth-first spanning tree from node 0, scanning neighbours in
/// ascending `(node, label)` order. Returns `(child, label of tree arc)` for
/// every non-root node, or `None` if some node is unreachable.
fn bfs_tree(adj: &mut [Vec<(usize, usize)>]) -> Option<Vec<(usize, usize)>> {
    for list in adj.iter_mut() {
        list.sort_unstable();
    }
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n.saturating_sub(1));
    if n == 0 {
        return Some(out);
    }
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &(v, label) in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                out.push((v, label));
                queue.push_back(v);
            }
        }
    }
    (out.len() + 1 == n).then_some(out)
}

/// An optimal Morse matching of a closed 3-manifold, with the spine
/// matching it was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalMorse {
    pub matching: MorseMatching,
    pub spine: AcfmSolution,
}

impl OptimalMorse {
    pub fn total_critical(&self) -> usize {
        self.matching.total_critical()
    }
}

/// Maximum alternating cycle-free spine matching, completed to a Morse
/// matching. The spine decomposition is exact when the spine has at most
/// `options.exact_limit` nodes.
pub fn optimal_morse_3manifold_with(complex: &SimplicialComplex, options: &SolveOptions) -> Result<OptimalMorse, MorseError> {
    if !complex.is_closed_3_pseudomanifold() {
        return Err(MorseError::NotClosed3Manifold);
    }
    let spine = complex.spine();
    let solution = acfm::solve_with(&spine, options)?;
    let matching = complete_matching_3manifold(complex, &solution.witness)?;
    Ok(OptimalMorse { matching, spine: solution })
}

pub fn optimal_morse_3manifold(complex: &SimplicialComplex) -> Result<OptimalMorse, MorseError> {
    optimal_morse_3manifold_with(complex, &SolveOptions::default())
}

/// Erasability number with a certificate: deleting `critical` leaves an
/// erasable complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erasability {
    pub er: usize,
    pub critical: Vec<Simplex>,
    pub spine: AcfmSolution,
}

/// `er(K)` as the number of triangles left unmatched by a maximum
/// alternating cycle-free spine matching.
pub fn erasability_via_acfm(complex: &SimplicialComplex) -> Result<Erasability, MorseError> {
    erasability_via_acfm_with(complex, &SolveOptions::default())
}

pub fn erasability_via_acfm_with(complex: &SimplicialComplex, options: &SolveOptions) -> Result<Erasability, MorseError> {
    if complex.dim() != 2 {
        return Err(MorseError::NotDimension2);
    }
    let spine: Graph = complex.spine();
    let solution = acfm::solve_with(&spine, options)?;
    let t = complex.triangles().len();
    let mut alive = vec![true; t];
    for &(a, b) in &solution.witness {
        alive[a.min(b)] = false;
    }
    let critical: Vec<Simplex> = (0..t).filter(|&i| alive[i]).map(|i| complex.triangles()[i]).collect();
    let er = critical.len();
    if Some(er) != solution.unmatched_side_one {
        return Err(MorseError::CertificateInvalid);
    }
    let sys = TriangleSystem::new(complex);
    let mut rest: Vec<bool> = alive.iter().map(|&a| !a).collect();
    sys.erase(&mut rest);
    if rest.iter().any(|&a| a) {
        return Err(MorseError::CertificateInvalid);
    }
    Ok(Erasability { er, critical, spine: solution })
}
