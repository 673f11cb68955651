//! Simple undirected graphs with an optional two-sided partition.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::Simplex;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("arc {0}-{1} is a self-loop")]
    SelfLoop(usize, usize),
    #[error("arc {0}-{1} appears more than once")]
    DuplicateArc(usize, usize),
    #[error("arc {0}-{1} references a node outside 0..{2}")]
    NodeOutOfRange(usize, usize, usize),
    #[error("partition has {got} entries for {expected} nodes")]
    PartitionLength { expected: usize, got: usize },
    #[error("arc {0}-{1} joins two nodes on the same side")]
    ArcWithinSide(usize, usize),
    #[error("labels have {got} entries for {expected} nodes")]
    LabelLength { expected: usize, got: usize },
}

/// Side of a node in a bipartite graph. For spines, side one holds the
/// triangles and side two the edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    One,
    Two,
}

/// An undirected simple graph on nodes `0..node_count`.
///
/// Arcs are stored as `(u, v)` with `u < v`, sorted. Adjacency lists are
/// sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    arcs: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
    partition: Option<Vec<Side>>,
    labels: Option<Vec<Simplex>>,
}

impl Graph {
    pub fn new(node_count: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut normalized = Vec::new();
        for (u, v) in arcs {
            if u >= node_count || v >= node_count {
                return Err(GraphError::NodeOutOfRange(u, v, node_count));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u, v));
            }
            normalized.push(if u < v { (u, v) } else { (v, u) });
        }
        normalized.sort_unstable();
        if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateArc(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, v) in &normalized {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Self { node_count, arcs: normalized, adjacency, partition: None, labels: None })
    }

    /// Attach a two-sided partition; every arc must cross it.
    pub fn with_partition(mut self, sides: Vec<Side>) -> Result<Self, GraphError> {
        if sides.len() != self.node_count {
            return Err(GraphError::PartitionLength { expected: self.node_count, got: sides.len() });
        }
        if let Some(&(u, v)) = self.arcs.iter().find(|&&(u, v)| sides[u] == sides[v]) {
            return Err(GraphError::ArcWithinSide(u, v));
        }
        self.partition = Some(sides);
        Ok(self)
    }

    pub fn with_labels(mut self, labels: Vec<Simplex>) -> Result<Self, GraphError> {
        if labels.len() != self.node_count {
            return Err(GraphError::LabelLength { expected: self.node_count, got: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn complete(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, arcs).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three nodes");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn neighbors(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    pub fn degree(&self, node: usize) -> usize {
        self.adjacency[node].len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.node_count && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn partition(&self) -> Option<&[Side]> {
        self.partition.as_deref()
    }

    pub fn side(&self, node: usize) -> Option<Side> {
        self.partition.as_ref().map(|p| p[node])
    }

    pub fn labels(&self) -> Option<&[Simplex]> {
        self.labels.as_deref()
    }

    pub fn label(&self, node: usize) -> Option<&Simplex> {
        self.labels.as_ref().map(|l| &l[node])
    }

    /// Number of side-one nodes, when a partition is attached.
    pub fn side_one_count(&self) -> Option<usize> {
        self.partition.as_ref().map(|p| p.iter().filter(|&&s| s == Side::One).count())
    }

    /// A proper two-colouring if the graph is bipartite. The lowest node of
    /// every component is placed on side one.
    pub fn two_coloring(&self) -> Option<Vec<Side>> {
        let mut color: Vec<Option<Side>> = vec![None; self.node_count];
        let mut queue = VecDeque::new();
        for start in 0..self.node_count {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(Side::One);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                let other = if cu == Side::One { Side::Two } else { Side::One };
                for &v in &self.adjacency[u] {
                    match color[v] {
                        None => {
                            color[v] = Some(other);
                            queue.push_back(v);
                        }
                        Some(c) if c == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.partition.is_some() || self.two_coloring().is_some()
    }

    /// Connected components, each sorted, ordered by their lowest node.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.node_count];
        let mut out = Vec::new();
        for start in 0..self.node_count {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.node_count == 0 || self.components().len() == 1
    }

    /// The graph with node `i` renamed to `perm[i]`. Partition and labels
    /// follow their nodes.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.node_count);
        let mut g = Self::new(self.node_count, self.arcs.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabelling preserves simplicity");
        if let Some(p) = &self.partition {
            let mut sides = vec![Side::One; self.node_count];
            for (i, &s) in p.iter().enumerate() {
                sides[perm[i]] = s;
            }
            g.partition = Some(sides);
        }
        if let Some(l) = &self.labels {
            let mut labels = l.clone();
            for (i, s) in l.iter().enumerate() {
                labels[perm[i]] = *s;
            }
            g.labels = Some(labels);
        }
        g
    }
}
