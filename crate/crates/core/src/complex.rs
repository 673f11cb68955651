//! Simplicial complexes of dimension 2 and 3 and the graphs derived from them.
//!
//! A complex is given by its maximal faces (all triangles or all tetrahedra).
//! Lower-dimensional faces are derived once at construction and kept sorted, so
//! the dense node ids used by [`SimplicialComplex::spine`],
//! [`SimplicialComplex::dual_graph`] and [`SimplicialComplex::hasse_diagram`]
//! follow sorted simplex order and are reproducible.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use crate::graph::{Graph, Side};

pub type Vertex = u32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("a complex needs at least one maximal face")]
    Empty,
    #[error("face {index} has {len} vertices; only triangles (3) and tetrahedra (4) are accepted")]
    BadArity { index: usize, len: usize },
    #[error("maximal faces mix triangles and tetrahedra")]
    MixedDimension,
    #[error("face {0} repeats a vertex")]
    DegenerateFace(Simplex),
    #[error("face {0} is listed twice")]
    DuplicateFace(Simplex),
    #[error("operation needs a 2-dimensional complex")]
    NotDimension2,
    #[error("operation needs a 3-dimensional complex")]
    NotDimension3,
    #[error("triangle {0} lies in more than two tetrahedra")]
    TriangleInMoreThanTwoTetrahedra(Simplex),
}

/// A simplex of dimension at most 3, stored as its sorted vertex list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    len: u8,
    verts: [Vertex; 4],
}

impl Simplex {
    /// Build a simplex from 1 to 4 vertices, sorting them. Returns `None` on a
    /// repeated vertex or an unsupported size.
    pub fn new(vertices: &[Vertex]) -> Option<Self> {
        if vertices.is_empty() || vertices.len() > 4 {
            return None;
        }
        let mut verts = [0; 4];
        verts[..vertices.len()].copy_from_slice(vertices);
        verts[..vertices.len()].sort_unstable();
        if verts[..vertices.len()].windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(Self { len: vertices.len() as u8, verts })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.verts[..self.len as usize]
    }

    pub fn dim(&self) -> usize {
        self.len as usize - 1
    }

    /// The codimension-1 faces, in sorted order.
    pub fn facets(&self) -> Vec<Simplex> {
        if self.len == 1 {
            return Vec::new();
        }
        let v = self.vertices();
        let mut out: Vec<Simplex> = (0..v.len())
            .map(|skip| {
                let rest: Vec<Vertex> =
                    v.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &x)| x).collect();
                Simplex::new(&rest).expect("sub-simplex of a simplex")
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Every face of dimension `d` (including `self` when `d == dim`).
    pub fn faces_of_dim(&self, d: usize) -> Vec<Simplex> {
        let v = self.vertices();
        let k = d + 1;
        if k > v.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        for mask in 0u32..(1 << v.len()) {
            if mask.count_ones() as usize == k {
                let sub: Vec<Vertex> =
                    v.iter().enumerate().filter(|&(i, _)| mask & (1 << i) != 0).map(|(_, &x)| x).collect();
                out.push(Simplex::new(&sub).expect("sub-simplex of a simplex"));
            }
        }
        out.sort_unstable();
        out
    }

    /// Whether `other` is a face of `self`.
    pub fn contains(&self, other: &Simplex) -> bool {
        other.vertices().iter().all(|x| self.vertices().binary_search(x).is_ok())
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.vertices().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// A pure simplicial complex of dimension 2 or 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    dim: usize,
    /// `faces[d]` holds every d-simplex, sorted.
    faces: [Vec<Simplex>; 4],
}

impl SimplicialComplex {
    /// Validate and canonicalise a list of maximal faces.
    pub fn new<F, I>(maximal_faces: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[Vertex]>,
    {
        let mut facets = Vec::new();
        let mut arity = None;
        for (index, face) in maximal_faces.into_iter().enumerate() {
            let face = face.as_ref();
            if face.len() != 3 && face.len() != 4 {
                return Err(ComplexError::BadArity { index, len: face.len() });
            }
            match arity {
                None => arity = Some(face.len()),
                Some(a) if a != face.len() => return Err(ComplexError::MixedDimension),
                Some(_) => {}
            }
            let simplex = Simplex::new(face).ok_or_else(|| {
                let mut verts = [0; 4];
                verts[..face.len()].copy_from_slice(face);
                ComplexError::DegenerateFace(Simplex { len: face.len() as u8, verts })
            })?;
            facets.push(simplex);
        }
        let Some(arity) = arity else {
            return Err(ComplexError::Empty);
        };
        facets.sort_unstable();
        if let Some(w) = facets.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateFace(w[0]));
        }
        let dim = arity - 1;
        let mut faces: [Vec<Simplex>; 4] = Default::default();
        for d in 0..dim {
            let mut all: Vec<Simplex> = facets.iter().flat_map(|f| f.faces_of_dim(d)).collect();
            all.sort_unstable();
            all.dedup();
            faces[d] = all;
        }
        faces[dim] = facets;
        Ok(Self { dim, faces })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn faces(&self, d: usize) -> &[Simplex] {
        if d <= 3 {
            &self.faces[d]
        } else {
            &[]
        }
    }

    pub fn maximal_faces(&self) -> &[Simplex] {
        &self.faces[self.dim]
    }

    pub fn vertices(&self) -> &[Simplex] {
        &self.faces[0]
    }

    pub fn edges(&self) -> &[Simplex] {
        &self.faces[1]
    }

    pub fn triangles(&self) -> &[Simplex] {
        &self.faces[2]
    }

    pub fn tetrahedra(&self) -> &[Simplex] {
        &self.faces[3]
    }

    /// Dense index of `s` among the simplexes of its dimension.
    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.faces(s.dim()).binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn simplex_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.faces.iter().enumerate().map(|(d, f)| if d % 2 == 0 { f.len() as i64 } else { -(f.len() as i64) }).sum()
    }

    pub fn hasse_diagram(&self) -> HasseDiagram {
        let mut simplices = Vec::with_capacity(self.simplex_count());
        let mut offsets = [0usize; 5];
        for d in 0..=3 {
            offsets[d] = simplices.len();
            simplices.extend_from_slice(&self.faces[d]);
        }
        offsets[4] = simplices.len();
        let mut arcs = Vec::new();
        for d in 1..=self.dim {
            for (i, tau) in self.faces[d].iter().enumerate() {
                for sigma in tau.facets() {
                    let j = self.faces[d - 1].binary_search(&sigma).expect("faces are closed under taking faces");
                    arcs.push((offsets[d] + i, offsets[d - 1] + j));
                }
            }
        }
        HasseDiagram { simplices, offsets, arcs }
    }

    /// The bipartite triangle/edge incidence graph. Nodes `0..t` are the
    /// triangles (side one), nodes `t..t+e` the edges (side two), each block
    /// in sorted simplex order.
    pub fn spine(&self) -> Graph {
        let tris = self.triangles();
        let edges = self.edges();
        let t = tris.len();
        let mut arcs = Vec::with_capacity(3 * t);
        for (i, tri) in tris.iter().enumerate() {
            for e in tri.facets() {
                let j = edges.binary_search(&e).expect("edge of a triangle is in the complex");
                arcs.push((i, t + j));
            }
        }
        let mut sides = vec![Side::One; t];
        sides.resize(t + edges.len(), Side::Two);
        let labels: Vec<Simplex> = tris.iter().chain(edges.iter()).copied().collect();
        Graph::new(t + edges.len(), arcs)
            .and_then(|g| g.with_partition(sides))
            .and_then(|g| g.with_labels(labels))
            .expect("spine is a simple bipartite graph")
    }

    /// Spine node id of a triangle or edge.
    pub fn spine_node(&self, s: &Simplex) -> Option<usize> {
        match s.dim() {
            2 => self.triangles().binary_search(s).ok(),
            1 => self.edges().binary_search(s).ok().map(|j| self.triangles().len() + j),
            _ => None,
        }
    }

    /// For each triangle, the sorted indices of the tetrahedra containing it.
    pub fn triangle_cofaces(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.triangles().len()];
        for (k, tet) in self.tetrahedra().iter().enumerate() {
            for f in tet.facets() {
                let i = self.triangles().binary_search(&f).expect("triangle of a tetrahedron");
                out[i].push(k);
            }
        }
        out
    }

    /// One node per tetrahedron, one arc per pair of tetrahedra sharing a
    /// triangle. Parallel adjacencies collapse to a single arc.
    pub fn dual_graph(&self) -> Result<Graph, ComplexError> {
        if self.dim != 3 {
            return Err(ComplexError::NotDimension3);
        }
        let mut arcs = Vec::new();
        for (i, cof) in self.triangle_cofaces().iter().enumerate() {
            match cof.as_slice() {
                [a, b] => arcs.push((*a, *b)),
                [_] => {}
                _ => return Err(ComplexError::TriangleInMoreThanTwoTetrahedra(self.triangles()[i])),
            }
        }
        arcs.sort_unstable();
        arcs.dedup();
        let labels = self.tetrahedra().to_vec();
        Ok(Graph::new(labels.len(), arcs)
            .and_then(|g| g.with_labels(labels))
            .expect("dual graph is simple after collapsing parallel arcs"))
    }

    /// Whether every triangle lies in exactly two tetrahedra.
    pub fn is_closed_3_pseudomanifold(&self) -> bool {
        self.dim == 3 && self.triangle_cofaces().iter().all(|c| c.len() == 2)
    }

    fn require_dim2(&self) -> Result<TriangleSystem, ComplexError> {
        if self.dim != 2 {
            return Err(ComplexError::NotDimension2);
        }
        Ok(TriangleSystem::new(self))
    }

    /// Triangles with at least one edge contained in no other triangle.
    pub fn external_triangles(&self) -> Result<Vec<Simplex>, ComplexError> {
        let sys = self.require_dim2()?;
        let alive = vec![true; sys.triangle_count()];
        Ok(sys.external(&alive).into_iter().map(|t| self.triangles()[t]).collect())
    }

    /// Erase external triangles until none remains.
    pub fn erase_greedy(&self) -> Result<Erasure, ComplexError> {
        let sys = self.require_dim2()?;
        let mut alive = vec![true; sys.triangle_count()];
        let order = sys.erase(&mut alive);
        let tris = self.triangles();
        let residual: Vec<Simplex> = alive.iter().enumerate().filter(|(_, &a)| a).map(|(i, _)| tris[i]).collect();
        Ok(Erasure {
            erasable: residual.is_empty(),
            residual,
            order: order.into_iter().map(|i| tris[i]).collect(),
        })
    }

    /// Smallest number of triangles whose removal makes the complex erasable,
    /// searched exhaustively by increasing size up to `k_max`.
    pub fn brute_force_er(&self, k_max: usize) -> Result<Option<usize>, ComplexError> {
        let sys = self.require_dim2()?;
        Ok(sys.brute_force_er(k_max))
    }

    /// Triangle index sets of the strongly connected components (triangles
    /// joined through shared edges), ordered by lowest triangle.
    pub fn triangle_components(&self) -> Result<Vec<Vec<usize>>, ComplexError> {
        let sys = self.require_dim2()?;
        let n = sys.triangle_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let t = comp[i];
                i += 1;
                for &e in &sys.tri_edges[t] {
                    for &u in &sys.edge_tris[e] {
                        if !seen[u] {
                            seen[u] = true;
                            comp.push(u);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        Ok(out)
    }

    /// The complex spanned by a subset of this complex's maximal faces, or
    /// `None` if the subset is empty.
    pub fn subcomplex(&self, facet_indices: &[usize]) -> Option<SimplicialComplex> {
        let faces: Vec<Simplex> = facet_indices.iter().map(|&i| self.maximal_faces()[i]).collect();
        if faces.is_empty() {
            return None;
        }
        Some(SimplicialComplex::new(faces.iter().map(|s| s.vertices().to_vec())).expect("subset of a valid complex"))
    }
}

/// Outcome of a greedy erasure run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Erasure {
    pub erasable: bool,
    pub residual: Vec<Simplex>,
    pub order: Vec<Simplex>,
}

/// Triangle/edge incidence of a 2-complex, indexed densely. Erasure state is
/// an `alive` mask over triangles.
#[derive(Debug, Clone)]
pub struct TriangleSystem {
    tri_edges: Vec<[usize; 3]>,
    edge_tris: Vec<Vec<usize>>,
}

impl TriangleSystem {
    pub fn new(complex: &SimplicialComplex) -> Self {
        let edges = complex.edges();
        let mut edge_tris = vec![Vec::new(); edges.len()];
        let tri_edges: Vec<[usize; 3]> = complex
            .triangles()
            .iter()
            .enumerate()
            .map(|(t, tri)| {
                let f = tri.facets();
                let mut ids = [0; 3];
                for (k, e) in f.iter().enumerate() {
                    ids[k] = edges.binary_search(e).expect("edge of a triangle");
                    edge_tris[ids[k]].push(t);
                }
                ids
            })
            .collect();
        Self { tri_edges, edge_tris }
    }

    pub fn triangle_count(&self) -> usize {
        self.tri_edges.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_tris.len()
    }

    pub fn triangle_edges(&self, t: usize) -> [usize; 3] {
        self.tri_edges[t]
    }

    pub fn edge_triangles(&self, e: usize) -> &[usize] {
        &self.edge_tris[e]
    }

    fn live_degree(&self, alive: &[bool], e: usize) -> usize {
        self.edge_tris[e].iter().filter(|&&t| alive[t]).count()
    }

    /// Live triangles having an edge in no other live triangle.
    pub fn external(&self, alive: &[bool]) -> Vec<usize> {
        (0..self.triangle_count())
            .filter(|&t| alive[t] && self.tri_edges[t].iter().any(|&e| self.live_degree(alive, e) == 1))
            .collect()
    }

    /// Greedily erase external triangles (lowest index first) and return the
    /// erase order. `alive` is left holding the residual.
    pub fn erase(&self, alive: &mut [bool]) -> Vec<usize> {
        let mut count: Vec<usize> = (0..self.edge_count()).map(|e| self.live_degree(alive, e)).collect();
        let mut heap: BinaryHeap<Reverse<usize>> = BinaryHeap::new();
        for t in 0..self.triangle_count() {
            if alive[t] && self.tri_edges[t].iter().any(|&e| count[e] == 1) {
                heap.push(Reverse(t));
            }
        }
        let mut order = Vec::new();
        while let Some(Reverse(t)) = heap.pop() {
            if !alive[t] {
                continue;
            }
            alive[t] = false;
            order.push(t);
            for &e in &self.tri_edges[t] {
                count[e] -= 1;
                if count[e] == 1 {
                    if let Some(&u) = self.edge_tris[e].iter().find(|&&u| alive[u]) {
                        heap.push(Reverse(u));
                    }
                }
            }
        }
        order
    }

    /// Exhaustive minimum number of deleted triangles, by increasing size.
    ///
    /// Candidates are drawn from the residual of greedy erasure at every
    /// level: a deleted triangle that greedy erasure would remove anyway can
    /// be dropped from the deletion set without losing erasability. Since
    /// erasure is confluent the outcome depends only on the residual and the
    /// remaining budget, so residuals already explored with at least the
    /// same budget are skipped.
    pub fn brute_force_er(&self, k_max: usize) -> Option<usize> {
        let mut alive = vec![true; self.triangle_count()];
        self.erase(&mut alive);
        let mut failed = BTreeMap::new();
        (0..=k_max).find(|&k| self.erasable_with(&alive, k, &mut failed))
    }

    fn erasable_with(&self, alive: &[bool], budget: usize, failed: &mut BTreeMap<Vec<bool>, usize>) -> bool {
        if !alive.iter().any(|&a| a) {
            return true;
        }
        if budget == 0 {
            return false;
        }
        if failed.get(alive).is_some_and(|&b| b >= budget) {
            return false;
        }
        for t in 0..alive.len() {
            if !alive[t] {
                continue;
            }
            let mut next = alive.to_vec();
            next[t] = false;
            self.erase(&mut next);
            if self.erasable_with(&next, budget - 1, failed) {
                return true;
            }
        }
        failed.insert(alive.to_vec(), budget);
        false
    }
}

/// The Hasse diagram: every simplex is a node, with an arc from each simplex
/// to each of its codimension-1 faces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseDiagram {
    simplices: Vec<Simplex>,
    offsets: [usize; 5],
    arcs: Vec<(usize, usize)>,
}

impl HasseDiagram {
    pub fn node_count(&self) -> usize {
        self.simplices.len()
    }

    pub fn simplices(&self) -> &[Simplex] {
        &self.simplices
    }

    /// Arcs `(tau, sigma)` directed from the higher-dimensional simplex.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn node_of(&self, s: &Simplex) -> Option<usize> {
        let d = s.dim();
        self.simplices[self.offsets[d]..self.offsets[d + 1]].binary_search(s).ok().map(|i| self.offsets[d] + i)
    }

    /// Node range of the d-simplexes.
    pub fn level(&self, d: usize) -> core::ops::Range<usize> {
        self.offsets[d]..self.offsets[d + 1]
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn validation_counts_faces() {
        let k = tri();
        assert_eq!((k.triangles().len(), k.edges().len(), k.vertices().len()), (1, 3, 3));
        let p = pentachoron_boundary();
        assert_eq!(p.dim(), 3);
        assert_eq!(
            (p.tetrahedra().len(), p.triangles().len(), p.edges().len(), p.vertices().len()),
            (5, 10, 10, 5)
        );
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            SimplicialComplex::new([[0, 1, 2], [0, 2, 1]]),
            Err(ComplexError::DuplicateFace(Simplex::new(&[0, 1, 2]).unwrap()))
        );
        assert!(matches!(SimplicialComplex::new([[0, 0, 2]]), Err(ComplexError::DegenerateFace(_))));
        let mixed: Vec<Vec<u32>> = vec![vec![0, 1, 2], vec![0, 1, 2, 3]];
        assert_eq!(SimplicialComplex::new(mixed), Err(ComplexError::MixedDimension));
        assert_eq!(SimplicialComplex::new(Vec::<[u32; 3]>::new()), Err(ComplexError::Empty));
        assert_eq!(SimplicialComplex::new([[0u32, 1]]), Err(ComplexError::BadArity { index: 0, len: 2 }));
    }

    #[test]
    fn hasse_diagram_counts() {
        let h = tri().hasse_diagram();
        assert_eq!((h.node_count(), h.arcs().len()), (7, 9));
        let h = tetra_boundary().hasse_diagram();
        assert_eq!((h.node_count(), h.arcs().len()), (14, 24));
        // arc count = sum over simplexes of (dim + 1), excluding vertices
        let p = pentachoron_boundary();
        let expected: usize = (1..=3).map(|d| p.faces(d).len() * (d + 1)).sum();
        assert_eq!(p.hasse_diagram().arcs().len(), expected);
    }

    #[test]
    fn spine_shapes() {
        let s = tetra_boundary().spine();
        assert_eq!((s.side_one_count(), s.node_count(), s.arc_count()), (Some(4), 10, 12));
        assert!((0..4).all(|t| s.degree(t) == 3));
        assert!((4..10).all(|e| s.degree(e) == 2));

        let s = pentachoron_boundary().spine();
        assert_eq!((s.node_count(), s.arc_count()), (20, 30));
        assert!((0..20).all(|v| s.degree(v) == 3));

        let s = tri().spine();
        assert_eq!((s.node_count(), s.arc_count()), (4, 3));
    }

    #[test]
    fn dual_graphs() {
        let d = pentachoron_boundary().dual_graph().unwrap();
        assert_eq!(d, Graph::complete(5).with_labels(pentachoron_boundary().tetrahedra().to_vec()).unwrap());
        let single = SimplicialComplex::new([[0, 1, 2, 3]]).unwrap().dual_graph().unwrap();
        assert_eq!((single.node_count(), single.arc_count()), (1, 0));
        let glued = SimplicialComplex::new([[0, 1, 2, 3], [0, 1, 2, 4]]).unwrap().dual_graph().unwrap();
        assert_eq!((glued.node_count(), glued.arc_count()), (2, 1));
        assert_eq!(tri().dual_graph(), Err(ComplexError::NotDimension3));
        let fan = SimplicialComplex::new([[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 2, 5]]).unwrap();
        assert!(matches!(fan.dual_graph(), Err(ComplexError::TriangleInMoreThanTwoTetrahedra(_))));
    }

    #[test]
    fn external_triangle_examples() {
        assert_eq!(tri().external_triangles().unwrap(), tri().triangles().to_vec());
        assert!(tetra_boundary().external_triangles().unwrap().is_empty());
        let two = SimplicialComplex::new([[0, 1, 2], [1, 2, 3]]).unwrap();
        assert_eq!(two.external_triangles().unwrap().len(), 2);
    }

    #[test]
    fn greedy_erasure_examples() {
        let e = tri().erase_greedy().unwrap();
        assert!(e.erasable && e.residual.is_empty() && e.order.len() == 1);
        let e = tetra_boundary().erase_greedy().unwrap();
        assert!(!e.erasable && e.residual.len() == 4 && e.order.is_empty());
        let open = SimplicialComplex::new([[0, 1, 2], [0, 1, 3], [0, 2, 3]]).unwrap();
        let e = open.erase_greedy().unwrap();
        assert!(e.erasable && e.order.len() == 3);
    }

    #[test]
    fn brute_force_er_examples() {
        assert_eq!(tri().brute_force_er(0).unwrap(), Some(0));
        assert_eq!(tetra_boundary().brute_force_er(2).unwrap(), Some(1));
        assert_eq!(tetra_boundary().brute_force_er(0).unwrap(), None);
        let two = SimplicialComplex::new([
            [0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3],
            [4, 5, 6], [4, 5, 7], [4, 6, 7], [5, 6, 7],
        ])
        .unwrap();
        assert_eq!(two.brute_force_er(3).unwrap(), Some(2));
    }

    #[test]
    fn simplex_faces() {
        let s = Simplex::new(&[3, 1, 2, 0]).unwrap();
        assert_eq!(s.vertices(), &[0, 1, 2, 3]);
        assert_eq!(s.facets().len(), 4);
        assert_eq!(s.faces_of_dim(1).len(), 6);
        assert!(s.contains(&Simplex::new(&[1, 3]).unwrap()));
        assert!(Simplex::new(&[1, 1]).is_none());
    }
}
