//! Reductions between erasability and Minimum Axiom Set.
//!
//! A Minimum Axiom Set instance has sentences and implication relations
//! `(U, s)`: once every sentence of `U` is derived, `s` is derived. An axiom
//! set is a seed whose closure is everything.
//!
//! [`erasability_to_mas`] turns the triangles of a 2-complex into sentences
//! (a triangle becomes erasable once the other triangles around one of its
//! edges are gone). [`mas_to_erasability_gadget`] goes the other way: every
//! sentence becomes a punctured sphere and every relation a bundle of tubes
//! that keeps its conclusion's sphere closed until all premise spheres are
//! erased.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use itertools::Itertools;

use crate::complex::{ComplexError, Simplex, SimplicialComplex, TriangleSystem, Vertex};

/// Default cap on gadget triangles.
pub const DEFAULT_GADGET_BUDGET: usize = 1_000_000;

/// Cap on the number of seed sets [`solve_mas_bruteforce`] may try.
pub const BRUTE_FORCE_SUBSET_BUDGET: u128 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error("sentence index {0} is out of range")]
    UnknownSentence(usize),
    #[error("sentence name {0:?} is used twice")]
    DuplicateSentence(String),
    #[error("search over {subsets} seed sets exceeds the brute-force budget")]
    TooLarge { subsets: u128 },
    #[error("no axiom set of size at most {k_max}")]
    NotFound { k_max: usize },
    #[error("relation {0} has no premises; its conclusion would be free and its sphere open")]
    EmptyPremise(usize),
    #[error("gadget needs {triangles} triangles, over the budget of {budget}")]
    BudgetExceeded { triangles: usize, budget: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// An implication `premises => conclusion`, by sentence index.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    /// Sorted and duplicate-free.
    pub premises: Vec<usize>,
    pub conclusion: usize,
}

impl Relation {
    pub fn new(mut premises: Vec<usize>, conclusion: usize) -> Self {
        premises.sort_unstable();
        premises.dedup();
        Self { premises, conclusion }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasInstance {
    names: Vec<String>,
    relations: Vec<Relation>,
    /// Target axiom-set size, when the instance carries one.
    pub k: Option<usize>,
}

impl MasInstance {
    pub fn new(names: Vec<String>, relations: Vec<Relation>) -> Result<Self, ReductionError> {
        let mut sorted: Vec<&String> = names.iter().collect();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(ReductionError::DuplicateSentence(w[0].clone()));
        }
        let n = names.len();
        for r in &relations {
            if let Some(&bad) = r.premises.iter().chain([&r.conclusion]).find(|&&i| i >= n) {
                return Err(ReductionError::UnknownSentence(bad));
            }
        }
        Ok(Self { names, relations, k: None })
    }

    /// Sentences named `0..n`.
    pub fn with_count(n: usize, relations: Vec<Relation>) -> Result<Self, ReductionError> {
        Self::new((0..n).map(|i| format!("{i}")).collect(), relations)
    }

    pub fn sentence_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Least set containing `seed` and closed under the relations, as a
/// membership mask.
pub fn mas_closure(instance: &MasInstance, seed: &[usize]) -> Result<Vec<bool>, ReductionError> {
    let n = instance.sentence_count();
    if let Some(&bad) = seed.iter().find(|&&s| s >= n) {
        return Err(ReductionError::UnknownSentence(bad));
    }
    let mut derived = vec![false; n];
    let mut missing: Vec<usize> = instance.relations.iter().map(|r| r.premises.len()).collect();
    let mut uses = vec![Vec::new(); n];
    for (ri, r) in instance.relations.iter().enumerate() {
        for &p in &r.premises {
            uses[p].push(ri);
        }
    }
    let mut stack: Vec<usize> = seed.to_vec();
    stack.extend(instance.relations.iter().filter(|r| r.premises.is_empty()).map(|r| r.conclusion));
    while let Some(s) = stack.pop() {
        if derived[s] {
            continue;
        }
        derived[s] = true;
        for &ri in &uses[s] {
            missing[ri] -= 1;
            if missing[ri] == 0 {
                stack.push(instance.relations[ri].conclusion);
            }
        }
    }
    Ok(derived)
}

/// Smallest axiom set size at most `k_max`, by trying seeds of increasing
/// size.
pub fn solve_mas_bruteforce(instance: &MasInstance, k_max: usize) -> Result<usize, ReductionError> {
    let n = instance.sentence_count();
    let k_max = k_max.min(n);
    let mut subsets: u128 = 0;
    let mut binom: u128 = 1;
    for k in 0..=k_max {
        subsets = subsets.saturating_add(binom);
        binom = binom.saturating_mul((n - k) as u128) / (k as u128 + 1);
    }
    if subsets > BRUTE_FORCE_SUBSET_BUDGET {
        return Err(ReductionError::TooLarge { subsets });
    }
    for k in 0..=k_max {
        for seed in (0..n).combinations(k) {
            if mas_closure(instance, &seed)?.iter().all(|&d| d) {
                return Ok(k);
            }
        }
    }
    Err(ReductionError::NotFound { k_max })
}

/// Minimum Axiom Set instance whose optimum equals `er(complex)`.
///
/// Triangles that greedy erasure removes are dropped first; the remaining
/// triangles are the sentences, and every edge `e` with star `S_e` among
/// them contributes `(S_e - {s}, s)` for each `s` in `S_e`.
pub fn erasability_to_mas(complex: &SimplicialComplex) -> Result<MasInstance, ReductionError> {
    if complex.dim() != 2 {
        return Err(ComplexError::NotDimension2.into());
    }
    let sys = TriangleSystem::new(complex);
    let mut alive = vec![true; sys.triangle_count()];
    sys.erase(&mut alive);
    let kept: Vec<usize> = (0..alive.len()).filter(|&t| alive[t]).collect();
    let mut sentence_of = vec![usize::MAX; alive.len()];
    for (i, &t) in kept.iter().enumerate() {
        sentence_of[t] = i;
    }
    let mut relations = Vec::new();
    for e in 0..sys.edge_count() {
        let star: Vec<usize> = sys.edge_triangles(e).iter().filter(|&&t| alive[t]).map(|&t| sentence_of[t]).collect();
        for &s in &star {
            let premises: Vec<usize> = star.iter().copied().filter(|&u| u != s).collect();
            debug_assert!(!premises.is_empty(), "residual triangles have no free edge");
            relations.push(Relation::new(premises, s));
        }
    }
    let names = kept.iter().map(|&t| format!("{}", complex.triangles()[t])).collect();
    MasInstance::new(names, relations)
}

/// A 2-complex built from a Minimum Axiom Set instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadget {
    pub complex: SimplicialComplex,
    /// One triangle of each sentence sphere; deleting it erases the sphere.
    pub representative: Vec<Simplex>,
    /// Triangles of each sentence sphere.
    pub sentence_triangles: Vec<Vec<Simplex>>,
    /// Triangles of the tubes of each relation, grouped per premise
    /// (in premise order), two tubes per premise.
    pub tube_triangles: Vec<Vec<Vec<Simplex>>>,
}

/// A sphere triangulated as a square cylinder capped by two apexes:
/// rings `0..=rings_last` of four vertices each.
struct Sphere {
    triangles: Vec<[Vertex; 3]>,
    /// Boundary cycles of the punctures, in puncture order.
    punctures: Vec<[Vertex; 3]>,
}

fn build_sphere(first_vertex: Vertex, puncture_count: usize) -> Sphere {
    let rings_last = if puncture_count == 0 { 0 } else { 3 * (puncture_count - 1) + 1 };
    let top = first_vertex;
    let ring = |r: usize, j: usize| first_vertex + 1 + (4 * r + j % 4) as Vertex;
    let bottom = first_vertex + 1 + 4 * (rings_last as Vertex + 1);
    let mut triangles = Vec::new();
    let mut punctures = Vec::new();
    for j in 0..4 {
        triangles.push([top, ring(0, j), ring(0, j + 1)]);
        triangles.push([bottom, ring(rings_last, j), ring(rings_last, j + 1)]);
    }
    for r in 0..rings_last {
        for j in 0..4 {
            let lower = [ring(r, j), ring(r, j + 1), ring(r + 1, j)];
            if j == 0 && r % 3 == 0 && r / 3 < puncture_count {
                punctures.push(lower);
            } else {
                triangles.push(lower);
            }
            triangles.push([ring(r, j + 1), ring(r + 1, j), ring(r + 1, j + 1)]);
        }
    }
    debug_assert_eq!(punctures.len(), puncture_count);
    Sphere { triangles, punctures }
}

fn sphere_vertex_count(puncture_count: usize) -> Vertex {
    let rings = if puncture_count == 0 { 1 } else { 3 * (puncture_count - 1) + 2 };
    2 + 4 * rings as Vertex
}

/// An annulus of six triangles between two boundary 3-cycles.
fn tube(near: [Vertex; 3], far: [Vertex; 3]) -> Vec<[Vertex; 3]> {
    let mut out = Vec::with_capacity(6);
    for i in 0..3 {
        let j = (i + 1) % 3;
        out.push([near[i], near[j], far[i]]);
        out.push([near[j], far[i], far[j]]);
    }
    out
}

/// The gadget complex of `instance`.
///
/// Each sentence is a sphere with one puncture per relation concluding it
/// and two per relation using it as a premise, taken in relation order. For
/// a relation `(U, s)` each premise sphere sends two tubes from its
/// punctures, and all `2|U|` far ends are glued to the same puncture of the
/// sphere of `s`.
pub fn mas_to_erasability_gadget(instance: &MasInstance, budget: usize) -> Result<Gadget, ReductionError> {
    if let Some(ri) = instance.relations.iter().position(|r| r.premises.is_empty()) {
        return Err(ReductionError::EmptyPremise(ri));
    }
    let n = instance.sentence_count();
    // Puncture slots per sentence: (relation, role) where role None = far,
    // Some(premise position, copy) = near.
    type Slot = (usize, Option<(usize, usize)>);
    let mut slots: Vec<Vec<Slot>> = vec![Vec::new(); n];
    for (ri, r) in instance.relations.iter().enumerate() {
        for s in 0..n {
            if r.conclusion == s {
                slots[s].push((ri, None));
            }
            if let Ok(pi) = r.premises.binary_search(&s) {
                slots[s].push((ri, Some((pi, 0))));
                slots[s].push((ri, Some((pi, 1))));
            }
        }
    }
    let triangles: usize = slots.iter().map(|p| {
        let rings = if p.is_empty() { 1 } else { 3 * (p.len() - 1) + 2 };
        8 * rings - p.len()
    }).sum::<usize>()
        + instance.relations.iter().map(|r| 12 * r.premises.len()).sum::<usize>();
    if triangles > budget {
        return Err(ReductionError::BudgetExceeded { triangles, budget });
    }

    let mut all = Vec::with_capacity(triangles);
    let mut next_vertex: Vertex = 0;
    let mut far = vec![None; instance.relations.len()];
    let mut near: Vec<Vec<[Option<[Vertex; 3]>; 2]>> =
        instance.relations.iter().map(|r| vec![[None, None]; r.premises.len()]).collect();
    let mut sentence_triangles = Vec::with_capacity(n);
    let mut representative = Vec::with_capacity(n);
    for (s, slot) in slots.iter().enumerate() {
        let sphere = build_sphere(next_vertex, slot.len());
        next_vertex += sphere_vertex_count(slot.len());
        for (&(ri, role), cycle) in slot.iter().zip(&sphere.punctures) {
            match role {
                None => far[ri] = Some(*cycle),
                Some((pi, copy)) => near[ri][pi][copy] = Some(*cycle),
            }
        }
        let tris: Vec<Simplex> = sphere.triangles.iter().map(|t| Simplex::new(t).expect("distinct vertices")).collect();
        representative.push(tris[0]);
        debug_assert!(s == sentence_triangles.len());
        sentence_triangles.push(tris);
        all.extend(sphere.triangles);
    }
    let mut tube_triangles = Vec::with_capacity(instance.relations.len());
    for (ri, r) in instance.relations.iter().enumerate() {
        let far_cycle = far[ri].expect("conclusion puncture assigned");
        let mut per_premise = Vec::with_capacity(r.premises.len());
        for pi in 0..r.premises.len() {
            let mut group = Vec::with_capacity(12);
            for copy in 0..2 {
                let near_cycle = near[ri][pi][copy].expect("premise puncture assigned");
                let t = tube(near_cycle, far_cycle);
                group.extend(t.iter().map(|x| Simplex::new(x).expect("distinct vertices")));
                all.extend(t);
            }
            per_premise.push(group);
        }
        tube_triangles.push(per_premise);
    }
    let complex = if all.is_empty() {
        return Err(ComplexError::Empty.into());
    } else {
        SimplicialComplex::new(all)?
    };
    debug_assert_eq!(complex.triangles().len(), triangles);
    Ok(Gadget { complex, representative, sentence_triangles, tube_triangles })
}

/// Worked instance with nine sentences `a..i`
/// and four relations.
pub fn example_instance() -> MasInstance {
    let names: Vec<String> = "abcdefghi".chars().map(|c| format!("{c}")).collect();
    let ix = |c: char| (c as u8 - b'a') as usize;
    let rel = |u: &str, s: char| Relation::new(u.chars().map(ix).collect(), ix(s));
    MasInstance::new(names, vec![rel("cde", 'i'), rel("fgh", 'i'), rel("b", 'c'), rel("ad", 'g')])
        .expect("valid instance")
}

/// Triangle index ranges are not stable across complexes; this maps a
/// simplex list back to indices of `complex`.
pub fn triangle_indices(complex: &SimplicialComplex, triangles: &[Simplex]) -> Vec<usize> {
    triangles.iter().map(|t| complex.index_of(t).expect("triangle of the complex")).collect()
}
