//! Tree decompositions: validation, min-fill and exact construction,
//! conversion to nice form, and the transfer from dual-graph decompositions
//! to spine decompositions.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::graph::Graph;

/// Largest graph accepted by [`exact_treewidth`] unless a caller passes a
/// different limit. The subset table has `2^n` entries.
pub const DEFAULT_EXACT_LIMIT: usize = 20;

const HARD_EXACT_LIMIT: usize = 26;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TreewidthError {
    #[error("graph has {nodes} nodes; exact treewidth is limited to {limit}")]
    TooLarge { nodes: usize, limit: usize },
    #[error("decomposition has no non-empty bag")]
    EmptyDecomposition,
    #[error("input decomposition is invalid: {0}")]
    InvalidInputDecomposition(Violation),
    #[error("dual decomposition is invalid: {0}")]
    InvalidDualDecomposition(Violation),
    #[error("transferred spine decomposition is invalid: {0}")]
    TransferFailed(Violation),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// One failed decomposition property, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Violation {
    #[error("bag {bag} holds node {node}, outside the graph")]
    NodeOutOfRange { bag: usize, node: usize },
    #[error("tree arc {0}-{1} references a missing bag")]
    TreeArcOutOfRange(usize, usize),
    #[error("node {0} is in no bag")]
    NodeNotCovered(usize),
    #[error("arc {0}-{1} is in no bag")]
    ArcNotCovered(usize, usize),
    #[error("bags holding node {0} do not form a subtree")]
    Incoherent(usize),
    #[error("tree arc {0}-{1} closes a cycle")]
    TreeHasCycle(usize, usize),
    #[error("bag {0} is not connected to bag 0")]
    TreeDisconnected(usize),
}

/// Outcome of [`TreeDecomposition::validate`]: every violated property, in
/// a fixed order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn into_result(self) -> Result<(), Violation> {
        match self.violations.into_iter().next() {
            None => Ok(()),
            Some(v) => Err(v),
        }
    }
}

/// A tree of bags. Bags are kept sorted and duplicate-free; tree arcs are
/// stored with the smaller bag index first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    arcs: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn new(bags: Vec<Vec<usize>>, arcs: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().map(|(a, b)| if a <= b { (a, b) } else { (b, a) }).collect();
        arcs.sort_unstable();
        Self { bags, arcs }
    }

    pub fn single_bag(nodes: Vec<usize>) -> Self {
        Self::new(vec![nodes], Vec::new())
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 for decompositions without nodes).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// Check coverage, coherence and tree shape against `graph`.
    pub fn validate(&self, graph: &Graph) -> ValidationReport {
        let mut violations = Vec::new();
        let n = graph.node_count();
        for (b, bag) in self.bags.iter().enumerate() {
            if let Some(&node) = bag.iter().find(|&&x| x >= n) {
                violations.push(Violation::NodeOutOfRange { bag: b, node });
            }
        }
        violations.extend(self.tree_violations());
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        let mut holders = vec![Vec::new(); n];
        for (b, bag) in self.bags.iter().enumerate() {
            for &x in bag {
                holders[x].push(b);
            }
        }
        for (x, h) in holders.iter().enumerate() {
            if h.is_empty() {
                violations.push(Violation::NodeNotCovered(x));
            }
        }
        for &(u, v) in graph.arcs() {
            if !self.bags.iter().any(|bag| bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()) {
                violations.push(Violation::ArcNotCovered(u, v));
            }
        }
        violations.extend(self.coherence_violations(&holders));
        ValidationReport { violations }
    }

    /// Tree shape and coherence only, over the nodes the bags mention.
    pub fn validate_structure(&self) -> ValidationReport {
        let mut violations = self.tree_violations();
        if violations.is_empty() {
            let n = self.bags.iter().flatten().max().map_or(0, |&m| m + 1);
            let mut holders = vec![Vec::new(); n];
            for (b, bag) in self.bags.iter().enumerate() {
                for &x in bag {
                    holders[x].push(b);
                }
            }
            violations.extend(self.coherence_violations(&holders));
        }
        ValidationReport { violations }
    }

    fn tree_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let k = self.bags.len();
        let mut parent: Vec<usize> = (0..k).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for &(a, b) in &self.arcs {
            if a >= k || b >= k {
                out.push(Violation::TreeArcOutOfRange(a, b));
                continue;
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                out.push(Violation::TreeHasCycle(a, b));
            } else {
                parent[ra] = rb;
            }
        }
        if k > 0 {
            let r0 = find(&mut parent, 0);
            if let Some(b) = (1..k).find(|&b| find(&mut parent, b) != r0) {
                out.push(Violation::TreeDisconnected(b));
            }
        }
        out
    }

    fn coherence_violations(&self, holders: &[Vec<usize>]) -> Vec<Violation> {
        let adj = self.tree_adjacency();
        let mut mark = vec![usize::MAX; self.bags.len()];
        let mut out = Vec::new();
        for (x, h) in holders.iter().enumerate() {
            if h.len() <= 1 {
                continue;
            }
            for &b in h {
                mark[b] = x;
            }
            let mut seen = 1;
            let mut stack = vec![h[0]];
            mark[h[0]] = usize::MAX - 1;
            while let Some(b) = stack.pop() {
                for &c in &adj[b] {
                    if mark[c] == x {
                        mark[c] = usize::MAX - 1;
                        seen += 1;
                        stack.push(c);
                    }
                }
            }
            for &b in h {
                mark[b] = usize::MAX;
            }
            if seen != h.len() {
                out.push(Violation::Incoherent(x));
            }
        }
        out
    }

    fn tree_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.arcs {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }
}

/// Width of the elimination ordering `order` (the largest number of
/// later-eliminated neighbours a node has in the filled graph).
pub fn elimination_width(graph: &Graph, order: &[usize]) -> usize {
    eliminate(graph, order).1
}

/// Elimination of `order` on `graph`: the later neighbours of each node in
/// the filled graph, and the resulting width.
fn eliminate(graph: &Graph, order: &[usize]) -> (Vec<Vec<usize>>, usize) {
    let n = graph.node_count();
    assert_eq!(order.len(), n, "ordering must list every node once");
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| graph.neighbors(v).iter().copied().collect()).collect();
    let mut higher = vec![Vec::new(); n];
    let mut width = 0;
    for &v in order {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        width = width.max(nb.len());
        higher[v] = nb;
        adj[v].clear();
    }
    (higher, width)
}

/// Decomposition with one bag per node: node `v` together with its later
/// neighbours. Trees of different components are chained root to root.
pub fn decomposition_from_ordering(graph: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = graph.node_count();
    let (higher, _) = eliminate(graph, order);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut bags = Vec::with_capacity(n);
    let mut arcs = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let mut bag = higher[v].clone();
        bag.push(v);
        bags.push(bag);
        match higher[v].iter().min_by_key(|&&u| position[u]) {
            Some(&u) => arcs.push((i, position[u])),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        arcs.push((w[0], w[1]));
    }
    TreeDecomposition::new(bags, arcs)
}

/// Min-fill elimination ordering, ties broken by lowest node index.
pub fn min_fill_ordering(graph: &Graph) -> Vec<usize> {
    let n = graph.node_count();
    let mut adj: Vec<BTreeSet<usize>> = (0..n).map(|v| graph.neighbors(v).iter().copied().collect()).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best: Option<(usize, usize)> = None;
        for v in (0..n).filter(|&v| alive[v]) {
            let nb: Vec<usize> = adj[v].iter().copied().collect();
            let mut fill = 0;
            for (i, &a) in nb.iter().enumerate() {
                fill += nb[i + 1..].iter().filter(|&&b| !adj[a].contains(&b)).count();
                if best.is_some_and(|(f, _)| fill >= f) {
                    break;
                }
            }
            if best.is_none_or(|(f, _)| fill < f) {
                best = Some((fill, v));
                if fill == 0 {
                    break;
                }
            }
        }
        let (_, v) = best.expect("a live node remains");
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for &a in &nb {
            adj[a].remove(&v);
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();
        alive[v] = false;
        order.push(v);
    }
    order
}

/// Valid decomposition from a min-fill ordering; its width bounds the
/// treewidth from above.
pub fn heuristic_decomposition(graph: &Graph) -> TreeDecomposition {
    decomposition_from_ordering(graph, &min_fill_ordering(graph))
}

/// Exact treewidth by dynamic programming over node subsets, with a witness
/// decomposition of that width.
///
/// `TW(S) = min over v in S of max(TW(S - v), |Q(S - v, v)|)`, where
/// `Q(S, v)` is the set of nodes outside `S + v` reachable from `v` through
/// `S`. The table is indexed by bitmask.
pub fn exact_treewidth(graph: &Graph, node_limit: usize) -> Result<(usize, TreeDecomposition), TreewidthError> {
    let n = graph.node_count();
    let limit = node_limit.min(HARD_EXACT_LIMIT);
    if n > limit {
        return Err(TreewidthError::TooLarge { nodes: n, limit });
    }
    if n == 0 {
        return Ok((0, TreeDecomposition::new(Vec::new(), Vec::new())));
    }
    let nbr: Vec<u32> = (0..n).map(|v| graph.neighbors(v).iter().fold(0u32, |m, &u| m | (1 << u))).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let q = |s: u32, v: usize| -> u32 {
        let mut comp = 1u32 << v;
        let mut frontier = comp;
        let mut outside = 0u32;
        while frontier != 0 {
            let mut reach = 0u32;
            let mut f = frontier;
            while f != 0 {
                let u = f.trailing_zeros() as usize;
                f &= f - 1;
                reach |= nbr[u];
            }
            outside |= reach & !s & !comp;
            frontier = reach & s & !comp;
            comp |= frontier;
        }
        (outside & !comp).count_ones()
    };
    // tw[s] stores TW(s) + 1 so that 0 encodes the empty set's minus infinity.
    let mut tw = vec![u8::MAX; 1usize << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = u8::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let prev = tw[(s & !(1 << v)) as usize];
            if prev >= best {
                continue;
            }
            let cand = prev.max(q(s & !(1 << v), v) as u8 + 1);
            best = best.min(cand);
        }
        tw[s as usize] = best;
    }
    let width = (tw[full as usize] - 1) as usize;
    let mut order = Vec::with_capacity(n);
    let mut s = full;
    while s != 0 {
        let target = tw[s as usize];
        let v = (0..n)
            .filter(|&v| s & (1 << v) != 0)
            .find(|&v| {
                let t = s & !(1 << v);
                tw[t as usize].max(q(t, v) as u8 + 1) == target
            })
            .expect("table entry has a witness");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    let td = decomposition_from_ordering(graph, &order);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Kind tag of a nice-decomposition bag, relative to its children.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BagKind {
    Leaf,
    Introduce(usize),
    Forget(usize),
    Join,
}

/// Rooted nice decomposition. Bags are numbered bottom-up: every child has
/// a smaller index than its parent, so iterating `0..bag_count()` visits
/// children first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    bags: Vec<Vec<usize>>,
    kinds: Vec<BagKind>,
    children: Vec<Vec<usize>>,
    root: usize,
    source_bags: usize,
}

/// A failed clause of the nice-decomposition definition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NiceViolation {
    #[error("bag {0} does not match its {1:?} tag")]
    KindMismatch(usize, BagKind),
    #[error("root bag {0} is not a singleton")]
    RootNotSingleton(usize),
    #[error("bag {0} has a child with a larger index or several parents")]
    BadTreeShape(usize),
    #[error("{bags} bags exceed the bound {bound}")]
    TooManyBags { bags: usize, bound: usize },
}

impl NiceTreeDecomposition {
    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn bag(&self, i: usize) -> &[usize] {
        &self.bags[i]
    }

    pub fn kind(&self, i: usize) -> BagKind {
        self.kinds[i]
    }

    pub fn kinds(&self) -> &[BagKind] {
        &self.kinds
    }

    pub fn children(&self, i: usize) -> &[usize] {
        &self.children[i]
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn bag_count(&self) -> usize {
        self.bags.len()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    /// The underlying (unrooted) decomposition.
    pub fn to_decomposition(&self) -> TreeDecomposition {
        let arcs = self.children.iter().enumerate().flat_map(|(p, cs)| cs.iter().map(move |&c| (c, p))).collect();
        TreeDecomposition::new(self.bags.clone(), arcs)
    }

    /// Linear bag-count witness: `4 * (width + 2) * (source bags + nodes)`.
    pub fn bag_bound(&self, node_count: usize) -> usize {
        4 * (self.width() + 2) * (self.source_bags + node_count)
    }

    /// Check every bag against the clause of its tag, the singleton root, the
    /// bottom-up numbering and the bag-count bound.
    pub fn check(&self, node_count: usize) -> Result<(), NiceViolation> {
        let mut parents = vec![0usize; self.bags.len()];
        for (i, cs) in self.children.iter().enumerate() {
            for &c in cs {
                if c >= i {
                    return Err(NiceViolation::BadTreeShape(i));
                }
                parents[c] += 1;
            }
        }
        for (i, &p) in parents.iter().enumerate() {
            if (i == self.root) != (p == 0) || p > 1 {
                return Err(NiceViolation::BadTreeShape(i));
            }
        }
        if self.bags[self.root].len() != 1 {
            return Err(NiceViolation::RootNotSingleton(self.root));
        }
        for i in 0..self.bags.len() {
            let bag = &self.bags[i];
            let cs = &self.children[i];
            let ok = match self.kinds[i] {
                BagKind::Leaf => cs.is_empty() && bag.len() == 1,
                BagKind::Introduce(x) => {
                    cs.len() == 1 && {
                        let child = &self.bags[cs[0]];
                        child.binary_search(&x).is_err() && bag.len() == child.len() + 1 && {
                            let mut with = child.clone();
                            with.push(x);
                            with.sort_unstable();
                            &with == bag
                        }
                    }
                }
                BagKind::Forget(x) => {
                    cs.len() == 1 && {
                        let child = &self.bags[cs[0]];
                        child.binary_search(&x).is_ok() && {
                            let without: Vec<usize> = child.iter().copied().filter(|&y| y != x).collect();
                            &without == bag
                        }
                    }
                }
                BagKind::Join => cs.len() == 2 && self.bags[cs[0]] == *bag && self.bags[cs[1]] == *bag,
            };
            if !ok {
                return Err(NiceViolation::KindMismatch(i, self.kinds[i]));
            }
        }
        let bound = self.bag_bound(node_count);
        if self.bags.len() > bound {
            return Err(NiceViolation::TooManyBags { bags: self.bags.len(), bound });
        }
        Ok(())
    }

    fn push(&mut self, bag: Vec<usize>, kind: BagKind, children: Vec<usize>) -> usize {
        self.bags.push(bag);
        self.kinds.push(kind);
        self.children.push(children);
        self.bags.len() - 1
    }

    fn introduce(&mut self, mut id: usize, x: usize) -> usize {
        let mut bag = self.bags[id].clone();
        let pos = bag.binary_search(&x).expect_err("introduced node is new");
        bag.insert(pos, x);
        id = self.push(bag, BagKind::Introduce(x), vec![id]);
        id
    }

    fn forget(&mut self, id: usize, x: usize) -> usize {
        let bag: Vec<usize> = self.bags[id].iter().copied().filter(|&y| y != x).collect();
        self.push(bag, BagKind::Forget(x), vec![id])
    }
}

/// Convert a decomposition into nice form of the same width.
///
/// Empty bags are dropped first. The root is the bag holding the lowest
/// node; children are visited in order of their lowest node; each child
/// chain forgets, then introduces, nodes in ascending order; several
/// children are combined by a left-deep chain of joins.
pub fn make_nice(td: &TreeDecomposition) -> Result<NiceTreeDecomposition, TreewidthError> {
    td.validate_structure().into_result().map_err(TreewidthError::InvalidInputDecomposition)?;
    let keep: Vec<usize> = (0..td.bag_count()).filter(|&b| !td.bags[b].is_empty()).collect();
    if keep.is_empty() {
        return Err(TreewidthError::EmptyDecomposition);
    }
    let mut new_id = vec![usize::MAX; td.bag_count()];
    for (i, &b) in keep.iter().enumerate() {
        new_id[b] = i;
    }
    let bags: Vec<Vec<usize>> = keep.iter().map(|&b| td.bags[b].clone()).collect();
    let k = bags.len();
    let mut adj = vec![Vec::new(); k];
    for &(a, b) in &td.arcs {
        if new_id[a] != usize::MAX && new_id[b] != usize::MAX {
            adj[new_id[a]].push(new_id[b]);
            adj[new_id[b]].push(new_id[a]);
        }
    }
    // Dropping empty bags may split the tree; the pieces share no node, so
    // chaining them keeps coherence.
    let mut comp = vec![usize::MAX; k];
    let mut comp_reps = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = comp_reps.len();
        let mut stack = vec![s];
        while let Some(b) = stack.pop() {
            for &c in &adj[b] {
                if comp[c] == usize::MAX {
                    comp[c] = comp_reps.len();
                    stack.push(c);
                }
            }
        }
        comp_reps.push(s);
    }
    for w in comp_reps.windows(2) {
        adj[w[0]].push(w[1]);
        adj[w[1]].push(w[0]);
    }

    let root_bag = (0..k).min_by_key(|&b| (bags[b][0], b)).expect("nonempty");
    // Parent pointers and child order by lowest node.
    let mut parent = vec![usize::MAX; k];
    let mut order = vec![root_bag];
    let mut seen = vec![false; k];
    seen[root_bag] = true;
    let mut queue = VecDeque::from([root_bag]);
    let mut children = vec![Vec::new(); k];
    while let Some(b) = queue.pop_front() {
        let mut cs: Vec<usize> = adj[b].iter().copied().filter(|&c| !seen[c]).collect();
        cs.sort_unstable_by_key(|&c| (bags[c][0], c));
        cs.dedup();
        for &c in &cs {
            seen[c] = true;
            parent[c] = b;
            order.push(c);
            queue.push_back(c);
        }
        children[b] = cs;
    }

    let mut nice = NiceTreeDecomposition {
        bags: Vec::new(),
        kinds: Vec::new(),
        children: Vec::new(),
        root: 0,
        source_bags: td.bag_count(),
    };
    let mut built = vec![usize::MAX; k];
    // Children before parents: reverse BFS order.
    for &b in order.iter().rev() {
        let target = &bags[b];
        let mut branches = Vec::new();
        for &c in &children[b] {
            let mut id = built[c];
            let child_bag = bags[c].clone();
            for &x in child_bag.iter().filter(|x| target.binary_search(x).is_err()) {
                id = nice.forget(id, x);
            }
            for &x in target.iter().filter(|x| child_bag.binary_search(x).is_err()) {
                id = nice.introduce(id, x);
            }
            branches.push(id);
        }
        let id = if branches.is_empty() {
            let mut id = nice.push(vec![target[0]], BagKind::Leaf, Vec::new());
            for &x in &target[1..] {
                id = nice.introduce(id, x);
            }
            id
        } else {
            let mut it = branches.into_iter();
            let mut acc = it.next().expect("nonempty");
            for other in it {
                acc = nice.push(target.clone(), BagKind::Join, vec![acc, other]);
            }
            acc
        };
        built[b] = id;
    }
    let mut id = built[root_bag];
    let root_nodes = bags[root_bag].clone();
    for &x in &root_nodes[1..] {
        id = nice.forget(id, x);
    }
    nice.root = id;
    debug_assert!(parent[root_bag] == usize::MAX);
    Ok(nice)
}

/// Decomposition of the spine of `complex` on the same tree as `dual_td`:
/// each bag holds every edge and triangle of the tetrahedra in the dual bag.
/// The width is at most `10 * (dual width) + 9`.
pub fn spine_decomposition_from_dual(
    complex: &SimplicialComplex,
    dual_td: &TreeDecomposition,
) -> Result<TreeDecomposition, TreewidthError> {
    let dual = complex.dual_graph()?;
    dual_td.validate(&dual).into_result().map_err(TreewidthError::InvalidDualDecomposition)?;
    let tets = complex.tetrahedra();
    let bags = dual_td
        .bags()
        .iter()
        .map(|bag| {
            let mut out: Vec<usize> = bag
                .iter()
                .flat_map(|&t| {
                    let tet = tets[t];
                    tet.faces_of_dim(2).into_iter().chain(tet.faces_of_dim(1))
                })
                .map(|s| complex.spine_node(&s).expect("face of a tetrahedron"))
                .collect();
            out.sort_unstable();
            out.dedup();
            out
        })
        .collect();
    let td = TreeDecomposition::new(bags, dual_td.arcs().to_vec());
    td.validate(&complex.spine()).into_result().map_err(TreewidthError::TransferFailed)?;
    Ok(td)
}

/// Heuristic upper bound, or the exact value when the graph has at most
/// `exact_limit` nodes. The flag reports which one was computed.
pub fn best_decomposition(graph: &Graph, exact_limit: usize) -> (TreeDecomposition, bool) {
    match exact_treewidth(graph, exact_limit) {
        Ok((_, td)) => (td, true),
        Err(_) => (heuristic_decomposition(graph), false),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn validation_examples() {
        let g = Graph::path(2);
        assert!(TreeDecomposition::single_bag(vec![0, 1]).validate(&g).is_valid());
        let split = TreeDecomposition::new(vec![vec![0], vec![1]], vec![]);
        let report = split.validate(&g);
        assert!(report.violations.contains(&Violation::TreeDisconnected(1)));
        let split = TreeDecomposition::new(vec![vec![0], vec![1]], vec![(0, 1)]);
        assert_eq!(split.validate(&g).violations, vec![Violation::ArcNotCovered(0, 1)]);
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        assert!(td.validate(&Graph::path(3)).is_valid());
        assert_eq!(td.width(), 1);
        let bad = TreeDecomposition::new(vec![vec![0, 1], vec![2], vec![1, 2]], vec![(0, 1), (1, 2)]);
        assert_eq!(bad.validate(&Graph::path(3)).violations, vec![Violation::Incoherent(1)]);
    }

    #[test]
    fn heuristic_examples() {
        let tree = Graph::new(5, [(0, 1), (0, 2), (2, 3), (2, 4)]).unwrap();
        assert_eq!(heuristic_decomposition(&tree).width(), 1);
        assert_eq!(heuristic_decomposition(&Graph::complete(5)).width(), 4);
        assert_eq!(heuristic_decomposition(&Graph::cycle(6)).width(), 2);
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let td = heuristic_decomposition(&g);
        assert!(td.validate(&g).is_valid());
    }

    #[test]
    fn exact_examples() {
        assert_eq!(exact_treewidth(&Graph::complete(5), 20).unwrap().0, 4);
        assert_eq!(exact_treewidth(&Graph::new(3, []).unwrap(), 20).unwrap().0, 0);
        assert_eq!(exact_treewidth(&Graph::cycle(6), 20).unwrap().0, 2);
        let g = Graph::path(21);
        assert_eq!(exact_treewidth(&g, 20), Err(TreewidthError::TooLarge { nodes: 21, limit: 20 }));
    }

    #[test]
    fn nice_examples() {
        let nice = make_nice(&TreeDecomposition::single_bag(vec![0])).unwrap();
        assert_eq!(nice.bag_count(), 1);
        assert_eq!(nice.kind(nice.root()), BagKind::Leaf);
        nice.check(1).unwrap();

        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        let nice = make_nice(&td).unwrap();
        nice.check(3).unwrap();
        assert_eq!(nice.width(), 1);
        assert!(nice.to_decomposition().validate(&Graph::path(3)).is_valid());

        let nice = make_nice(&TreeDecomposition::single_bag((0..5).collect())).unwrap();
        nice.check(5).unwrap();
        assert_eq!(nice.width(), 4);
        assert!(nice.bag_count() <= 2 * (5 + 5));

        assert_eq!(make_nice(&TreeDecomposition::single_bag(vec![])), Err(TreewidthError::EmptyDecomposition));
    }

    #[test]
    fn nice_with_empty_bags_and_joins() {
        let td = TreeDecomposition::new(
            vec![vec![1, 2], vec![], vec![0, 1], vec![1, 3], vec![4]],
            vec![(0, 1), (0, 2), (0, 3), (1, 4)],
        );
        let g = Graph::new(5, [(0, 1), (1, 2), (1, 3)]).unwrap();
        assert!(td.validate(&g).is_valid());
        let nice = make_nice(&td).unwrap();
        nice.check(5).unwrap();
        assert!(nice.to_decomposition().validate(&g).is_valid());
        assert!(nice.kinds().contains(&BagKind::Join));
    }

    #[test]
    fn transfer_examples() {
        let k = pentachoron_boundary();
        let td = spine_decomposition_from_dual(&k, &TreeDecomposition::single_bag((0..5).collect())).unwrap();
        assert_eq!(td.width(), 19);
        let glued = SimplicialComplex::new([[0, 1, 2, 3], [0, 1, 2, 4]]).unwrap();
        let td = spine_decomposition_from_dual(&glued, &TreeDecomposition::single_bag(vec![0, 1])).unwrap();
        assert_eq!(td.width(), 15);
        let single = SimplicialComplex::new([[0, 1, 2, 3]]).unwrap();
        let td = spine_decomposition_from_dual(&single, &TreeDecomposition::single_bag(vec![0])).unwrap();
        assert_eq!(td.width(), 9);
        let bad = TreeDecomposition::new(vec![vec![0], vec![1]], vec![(0, 1)]);
        assert!(matches!(
            spine_decomposition_from_dual(&glued, &bad),
            Err(TreewidthError::InvalidDualDecomposition(_))
        ));
    }
}
