//! Maximum alternating cycle-free matching.
//!
//! A matching admits an alternating cycle if some cycle of the graph uses
//! matched and unmatched arcs in turn. [`max_acfm`] solves the maximisation
//! exactly by dynamic programming over a nice tree decomposition;
//! [`brute_force_acfm`] enumerates matchings and serves as the oracle.
//!
//! # Class summaries
//!
//! A partial matching on the nodes introduced so far is summarised by
//!
//! * a [`Status`] per bag node: unmatched, matched to another bag node, or
//!   matched to a node already forgotten;
//! * the *segments*: alternating paths whose interior nodes are all
//!   forgotten and whose two ends are bag nodes. An end is a [`Port`], the
//!   bag node together with the kind (matched or not) of the path arc at it;
//! * the *bundles*: the maximal sets of segments with pairwise disjoint
//!   interiors. Only segments within one bundle can lie on a common cycle.
//!
//! Two partial matchings with the same summary have the same completions, so
//! each table keeps one representative per summary with the fewest
//! unmatched forgotten nodes. On bipartite graphs a closed alternating walk
//! always contains an alternating cycle, so all bundles merge into one.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, Side};
use crate::treewidth::{self, NiceTreeDecomposition, NiceViolation, Violation};

/// Arc limit of [`brute_force_acfm`].
pub const DEFAULT_BRUTE_FORCE_ARC_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AcfmError {
    #[error("arc set is not a matching of the graph")]
    NotAMatching,
    #[error("graph has {arcs} arcs; brute force is limited to {limit}")]
    TooLarge { arcs: usize, limit: usize },
    #[error("decomposition does not fit the graph: {0}")]
    InvalidDecomposition(Violation),
    #[error("decomposition is not nice: {0}")]
    NotNice(NiceViolation),
    #[error("{n} nodes with {unmatched} unmatched leaves an odd number of matched nodes")]
    ParityViolation { n: usize, unmatched: usize },
    #[error("reconstructed witness failed verification")]
    WitnessVerificationFailed,
    #[error("bag {bag} holds {classes} classes, over the limit of {limit}")]
    TableLimit { bag: usize, classes: usize, limit: usize },
}

/// Knobs of [`solve_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    /// Graphs with at most this many nodes get an exact decomposition.
    pub exact_limit: usize,
    /// Abort once a class table grows past this size.
    pub class_limit: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self { exact_limit: treewidth::DEFAULT_EXACT_LIMIT, class_limit: None }
    }
}

/// State of a bag node in a partial matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Free,
    /// Matched to the given bag node.
    Paired(usize),
    /// Matched to a forgotten node.
    Off,
}

/// A bag node and whether the arc leaving it along a segment is matched.
pub type Port = (usize, bool);

/// An alternating path through forgotten nodes, given by its end ports
/// (smaller first).
pub type Segment = (Port, Port);

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    /// One entry per bag node, in bag order.
    pub statuses: Vec<Status>,
    /// Sorted, inclusion-maximal, non-empty segment sets.
    pub bundles: Vec<Vec<Segment>>,
}

/// The representative partial matching of a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    /// Unmatched forgotten nodes.
    pub m: usize,
    /// Matched arcs, sorted.
    pub cert: Vec<(usize, usize)>,
}

/// Classes of partial matchings at one bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassTable {
    bag: Vec<usize>,
    classes: BTreeMap<ClassKey, Representative>,
}

impl ClassTable {
    fn new(bag: Vec<usize>) -> Self {
        Self { bag, classes: BTreeMap::new() }
    }

    pub fn bag(&self) -> &[usize] {
        &self.bag
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ClassKey, &Representative)> {
        self.classes.iter()
    }

    fn offer(&mut self, key: ClassKey, m: usize, cert: Vec<(usize, usize)>) {
        match self.classes.get_mut(&key) {
            Some(rep) => {
                if (m, &cert) < (rep.m, &rep.cert) {
                    *rep = Representative { m, cert };
                }
            }
            None => {
                self.classes.insert(key, Representative { m, cert });
            }
        }
    }

    fn pos(&self, x: usize) -> Option<usize> {
        self.bag.binary_search(&x).ok()
    }
}

/// Per-bag record of a DP run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DpStats {
    /// `(bag size, class count)` for every bag, in processing order.
    pub tables: Vec<(usize, usize)>,
}

impl DpStats {
    pub fn max_table(&self) -> usize {
        self.tables.iter().map(|&(_, c)| c).max().unwrap_or(0)
    }

    /// Whether every table has at most `2^(s^2 + s)` classes for bag size `s`.
    pub fn within_class_bound(&self) -> bool {
        self.tables.iter().all(|&(s, c)| c as u128 <= class_bound(s))
    }
}

/// `2^(s^2 + s)`, saturating.
pub fn class_bound(bag_size: usize) -> u128 {
    let e = bag_size * bag_size + bag_size;
    if e >= 127 {
        u128::MAX
    } else {
        1u128 << e
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcfmSolution {
    pub size: usize,
    /// Side-one nodes left unmatched, for bipartite inputs.
    pub unmatched_side_one: Option<usize>,
    /// Matched arcs, sorted.
    pub witness: Vec<(usize, usize)>,
    pub stats: DpStats,
}

/// Outcome at the root bag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSummary {
    pub min_unmatched: usize,
    pub max_size: usize,
    pub witness: Vec<(usize, usize)>,
}

/// The bag operations of the dynamic program for one graph.
#[derive(Debug, Clone)]
pub struct AcfmDp<'g> {
    graph: &'g Graph,
    bipartite: bool,
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

fn make_segment(p: Port, q: Port) -> Option<Segment> {
    if p.0 == q.0 {
        // Same port: the path returns through an unmatched arc on both sides
        // and can never close an alternating cycle. Opposite ports would
        // already be an alternating cycle, which earlier checks exclude.
        debug_assert_eq!(p.1, q.1, "segment closes an alternating cycle");
        return None;
    }
    Some(if p <= q { (p, q) } else { (q, p) })
}

fn other_end(s: &Segment, p: Port) -> Port {
    if s.0 == p {
        s.1
    } else {
        s.0
    }
}

fn touches(s: &Segment, x: usize) -> bool {
    s.0 .0 == x || s.1 .0 == x
}

const EMPTY_BUNDLE: &[Segment] = &[];

impl<'g> AcfmDp<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self { graph, bipartite: graph.is_bipartite() }
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    fn canonical(&self, mut family: Vec<Vec<Segment>>) -> Vec<Vec<Segment>> {
        for b in &mut family {
            b.sort_unstable();
            b.dedup();
        }
        family.retain(|b| !b.is_empty());
        if self.bipartite {
            let mut all: Vec<Segment> = family.into_iter().flatten().collect();
            all.sort_unstable();
            all.dedup();
            return if all.is_empty() { Vec::new() } else { vec![all] };
        }
        family.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        family.dedup();
        let mut kept: Vec<Vec<Segment>> = Vec::new();
        for b in family {
            let subsumed = kept.iter().any(|k| b.iter().all(|s| k.binary_search(s).is_ok()));
            if !subsumed {
                kept.push(b);
            }
        }
        kept.sort_unstable();
        kept
    }

    /// Whether the bag-level summary closes an alternating cycle through
    /// matched bag nodes using direct arcs and the segments of `bundle`.
    fn has_cycle(&self, bag: &[usize], statuses: &[Status], bundle: &[Segment]) -> bool {
        let k = bag.len();
        let idx = |x: usize| bag.binary_search(&x).ok();
        let matched = |i: usize| statuses[i] != Status::Free;
        // conn[i][t]: (target index, entry kind) leaving node i through kind t.
        let mut conn: Vec<[Vec<(usize, bool)>; 2]> = vec![[Vec::new(), Vec::new()]; k];
        for i in (0..k).filter(|&i| matched(i)) {
            let x = bag[i];
            if let Status::Paired(p) = statuses[i] {
                conn[i][1].push((idx(p).expect("partner in bag"), true));
            }
            for &y in self.graph.neighbors(x) {
                if statuses[i] == Status::Paired(y) {
                    continue;
                }
                if let Some(j) = idx(y) {
                    if matched(j) {
                        conn[i][0].push((j, false));
                    }
                }
            }
        }
        for &(p, q) in bundle {
            let (Some(i), Some(j)) = (idx(p.0), idx(q.0)) else { continue };
            if matched(i) && matched(j) {
                conn[i][p.1 as usize].push((j, q.1));
                conn[j][q.1 as usize].push((i, p.1));
            }
        }
        let mut on_path = vec![false; k];
        for s in (0..k).filter(|&i| matched(i)) {
            on_path[s] = true;
            if Self::extend(&conn, &mut on_path, s, s, true) {
                return true;
            }
            on_path[s] = false;
        }
        false
    }

    /// Depth-first search for a path leaving `at` through kind `leave` that
    /// returns to `start` through an unmatched port. Only nodes above
    /// `start` are visited, so each cycle is found from its lowest node.
    fn extend(conn: &[[Vec<(usize, bool)>; 2]], on_path: &mut [bool], start: usize, at: usize, leave: bool) -> bool {
        for &(j, entry) in &conn[at][leave as usize] {
            if j == start {
                if !entry {
                    return true;
                }
                continue;
            }
            if j < start || on_path[j] {
                continue;
            }
            on_path[j] = true;
            if Self::extend(conn, on_path, start, j, !entry) {
                return true;
            }
            on_path[j] = false;
        }
        false
    }

    fn any_cycle(&self, bag: &[usize], statuses: &[Status], bundles: &[Vec<Segment>]) -> bool {
        if bundles.is_empty() {
            self.has_cycle(bag, statuses, EMPTY_BUNDLE)
        } else {
            bundles.iter().any(|b| self.has_cycle(bag, statuses, b))
        }
    }

    /// The table of a leaf bag `{x}`: the empty matching.
    pub fn leaf(&self, x: usize) -> ClassTable {
        let mut t = ClassTable::new(vec![x]);
        t.offer(ClassKey { statuses: vec![Status::Free], bundles: Vec::new() }, 0, Vec::new());
        t
    }

    /// Add `x` to the bag, unmatched or matched to an unmatched bag neighbour.
    pub fn introduce(&self, child: &ClassTable, x: usize) -> ClassTable {
        let pos = child.bag.binary_search(&x).expect_err("introduced node is not in the child bag");
        let mut bag = child.bag.clone();
        bag.insert(pos, x);
        let mut out = ClassTable::new(bag.clone());
        let nbrs: Vec<(usize, usize)> = self
            .graph
            .neighbors(x)
            .iter()
            .filter_map(|&y| bag.binary_search(&y).ok().map(|j| (y, j)))
            .collect();
        for (key, rep) in &child.classes {
            let mut statuses = key.statuses.clone();
            statuses.insert(pos, Status::Free);
            for &(y, j) in &nbrs {
                if statuses[j] != Status::Free {
                    continue;
                }
                let mut st = statuses.clone();
                st[pos] = Status::Paired(y);
                st[j] = Status::Paired(x);
                if self.any_cycle(&bag, &st, &key.bundles) {
                    continue;
                }
                let mut cert = rep.cert.clone();
                let arc = norm(x, y);
                let at = cert.binary_search(&arc).expect_err("arc matched once");
                cert.insert(at, arc);
                out.offer(ClassKey { statuses: st, bundles: key.bundles.clone() }, rep.m, cert);
            }
            out.offer(ClassKey { statuses, bundles: key.bundles.clone() }, rep.m, rep.cert.clone());
        }
        out
    }

    /// Remove `x` from the bag, routing the segments through it.
    pub fn forget(&self, child: &ClassTable, x: usize) -> ClassTable {
        let pos = child.pos(x).expect("forgotten node is in the child bag");
        let mut bag = child.bag.clone();
        bag.remove(pos);
        let mut out = ClassTable::new(bag.clone());
        let bag_nbrs: Vec<usize> =
            self.graph.neighbors(x).iter().copied().filter(|y| bag.binary_search(y).is_ok()).collect();
        for (key, rep) in &child.classes {
            let mut statuses = key.statuses.clone();
            let sx = statuses.remove(pos);
            let base: Vec<&[Segment]> = if key.bundles.is_empty() {
                vec![EMPTY_BUNDLE]
            } else {
                key.bundles.iter().map(Vec::as_slice).collect()
            };
            let mut family = Vec::new();
            let mut m = rep.m;
            for bundle in base {
                let rest: Vec<Segment> = bundle.iter().copied().filter(|s| !touches(s, x)).collect();
                let at_u: Vec<&Segment> = bundle.iter().filter(|s| s.0 == (x, false) || s.1 == (x, false)).collect();
                let mut cands = Vec::new();
                match sx {
                    Status::Free => {}
                    Status::Paired(b) => {
                        let head = (b, true);
                        cands.extend(at_u.iter().filter_map(|s| make_segment(head, other_end(s, (x, false)))));
                        cands.extend(bag_nbrs.iter().filter(|&&y| y != b).filter_map(|&y| make_segment(head, (y, false))));
                    }
                    Status::Off => {
                        let at_m: Vec<&Segment> =
                            bundle.iter().filter(|s| s.0 == (x, true) || s.1 == (x, true)).collect();
                        for s1 in &at_m {
                            let head = other_end(s1, (x, true));
                            cands.extend(at_u.iter().filter_map(|s2| make_segment(head, other_end(s2, (x, false)))));
                            cands.extend(bag_nbrs.iter().filter_map(|&y| make_segment(head, (y, false))));
                        }
                    }
                }
                if cands.is_empty() {
                    family.push(rest);
                } else {
                    for c in cands {
                        let mut b = rest.clone();
                        b.push(c);
                        family.push(b);
                    }
                }
            }
            match sx {
                Status::Free => m += 1,
                Status::Paired(b) => {
                    let j = bag.binary_search(&b).expect("partner in bag");
                    statuses[j] = Status::Off;
                }
                Status::Off => {}
            }
            let bundles = self.canonical(family);
            out.offer(ClassKey { statuses, bundles }, m, rep.cert.clone());
        }
        out
    }

    /// Combine two tables over the same bag.
    pub fn join(&self, left: &ClassTable, right: &ClassTable) -> ClassTable {
        assert_eq!(left.bag, right.bag, "join bags differ");
        let bag = left.bag.clone();
        let mut out = ClassTable::new(bag.clone());
        for (kl, rl) in &left.classes {
            'pairs: for (kr, rr) in &right.classes {
                let mut statuses = Vec::with_capacity(bag.len());
                for (a, b) in kl.statuses.iter().zip(&kr.statuses) {
                    statuses.push(match (a, b) {
                        (Status::Free, s) | (s, Status::Free) => *s,
                        _ => continue 'pairs,
                    });
                }
                let ls: Vec<&[Segment]> =
                    if kl.bundles.is_empty() { vec![EMPTY_BUNDLE] } else { kl.bundles.iter().map(Vec::as_slice).collect() };
                let rs: Vec<&[Segment]> =
                    if kr.bundles.is_empty() { vec![EMPTY_BUNDLE] } else { kr.bundles.iter().map(Vec::as_slice).collect() };
                let mut family = Vec::with_capacity(ls.len() * rs.len());
                for a in &ls {
                    for b in &rs {
                        let mut u: Vec<Segment> = a.iter().chain(b.iter()).copied().collect();
                        u.sort_unstable();
                        u.dedup();
                        family.push(u);
                    }
                }
                let bundles = self.canonical(family);
                if self.any_cycle(&bag, &statuses, &bundles) {
                    continue;
                }
                let mut cert: Vec<(usize, usize)> = rl.cert.iter().chain(&rr.cert).copied().collect();
                cert.sort_unstable();
                out.offer(ClassKey { statuses, bundles }, rl.m + rr.m, cert);
            }
        }
        out
    }

    /// Minimum total of unmatched nodes over a singleton root table.
    pub fn finalize_root(&self, root: &ClassTable) -> Result<RootSummary, AcfmError> {
        assert_eq!(root.bag.len(), 1, "root bag must be a singleton");
        let n = self.graph.node_count();
        let mut best: Option<(usize, &Vec<(usize, usize)>)> = None;
        for (key, rep) in &root.classes {
            let total = match key.statuses[0] {
                Status::Free => rep.m + 1,
                Status::Off => rep.m,
                Status::Paired(_) => unreachable!("a singleton bag cannot hold a matched pair"),
            };
            if best.is_none_or(|(t, c)| (total, &rep.cert) < (t, c)) {
                best = Some((total, &rep.cert));
            }
        }
        let (min_unmatched, cert) = best.expect("root table is never empty");
        if min_unmatched > n || !(n - min_unmatched).is_multiple_of(2) {
            return Err(AcfmError::ParityViolation { n, unmatched: min_unmatched });
        }
        Ok(RootSummary { min_unmatched, max_size: (n - min_unmatched) / 2, witness: cert.clone() })
    }
}

/// Side-one nodes left unmatched by `matching`, using the attached
/// partition or else a two-colouring.
pub fn unmatched_side_one(graph: &Graph, matching: &[(usize, usize)]) -> Option<usize> {
    let sides = match graph.partition() {
        Some(p) => p.to_vec(),
        None => graph.two_coloring()?,
    };
    let mut matched = vec![false; graph.node_count()];
    for &(u, v) in matching {
        matched[u] = true;
        matched[v] = true;
    }
    Some((0..graph.node_count()).filter(|&v| sides[v] == Side::One && !matched[v]).count())
}

/// Maximum alternating cycle-free matching by dynamic programming over `nice`.
pub fn max_acfm(graph: &Graph, nice: &NiceTreeDecomposition) -> Result<AcfmSolution, AcfmError> {
    max_acfm_bounded(graph, nice, None)
}

/// [`max_acfm`] that gives up with [`AcfmError::TableLimit`] when a class
/// table exceeds `class_limit`.
pub fn max_acfm_bounded(
    graph: &Graph,
    nice: &NiceTreeDecomposition,
    class_limit: Option<usize>,
) -> Result<AcfmSolution, AcfmError> {
    let n = graph.node_count();
    if n == 0 {
        return Ok(AcfmSolution { size: 0, unmatched_side_one: Some(0), witness: Vec::new(), stats: DpStats::default() });
    }
    if let Some(v) = nice.to_decomposition().validate(graph).violations.into_iter().next() {
        return Err(AcfmError::InvalidDecomposition(v));
    }
    nice.check(n).map_err(AcfmError::NotNice)?;
    let dp = AcfmDp::new(graph);
    let mut tables: Vec<Option<ClassTable>> = vec![None; nice.bag_count()];
    let mut stats = DpStats::default();
    for i in 0..nice.bag_count() {
        let kids = nice.children(i);
        let table = match nice.kind(i) {
            treewidth::BagKind::Leaf => dp.leaf(nice.bag(i)[0]),
            treewidth::BagKind::Introduce(x) => {
                let c = tables[kids[0]].take().expect("child processed");
                dp.introduce(&c, x)
            }
            treewidth::BagKind::Forget(x) => {
                let c = tables[kids[0]].take().expect("child processed");
                dp.forget(&c, x)
            }
            treewidth::BagKind::Join => {
                let l = tables[kids[0]].take().expect("child processed");
                let r = tables[kids[1]].take().expect("child processed");
                dp.join(&l, &r)
            }
        };
        debug_assert_eq!(table.bag(), nice.bag(i));
        if let Some(limit) = class_limit.filter(|&l| table.len() > l) {
            return Err(AcfmError::TableLimit { bag: i, classes: table.len(), limit });
        }
        stats.tables.push((table.bag().len(), table.len()));
        tables[i] = Some(table);
    }
    let root = tables[nice.root()].take().expect("root processed");
    let summary = dp.finalize_root(&root)?;
    let witness = summary.witness;
    if witness.len() != summary.max_size || !is_alternating_cycle_free(graph, &witness).unwrap_or(false) {
        return Err(AcfmError::WitnessVerificationFailed);
    }
    Ok(AcfmSolution { size: summary.max_size, unmatched_side_one: unmatched_side_one(graph, &witness), witness, stats })
}

/// Decompose `graph` (exactly when it has at most `exact_limit` nodes) and
/// run [`max_acfm`].
pub fn solve(graph: &Graph, exact_limit: usize) -> Result<AcfmSolution, AcfmError> {
    solve_with(graph, &SolveOptions { exact_limit, class_limit: None })
}

pub fn solve_with(graph: &Graph, options: &SolveOptions) -> Result<AcfmSolution, AcfmError> {
    if graph.node_count() == 0 {
        return max_acfm(graph, &empty_nice());
    }
    let (td, _) = treewidth::best_decomposition(graph, options.exact_limit);
    let nice = treewidth::make_nice(&td).expect("constructed decompositions are valid and non-empty");
    max_acfm_bounded(graph, &nice, options.class_limit)
}

fn empty_nice() -> NiceTreeDecomposition {
    treewidth::make_nice(&treewidth::TreeDecomposition::single_bag(vec![0])).expect("single bag")
}

fn mates(graph: &Graph, matching: &[(usize, usize)]) -> Result<Vec<Option<usize>>, AcfmError> {
    let mut mate = vec![None; graph.node_count()];
    for &(u, v) in matching {
        if u >= graph.node_count() || v >= graph.node_count() || !graph.has_arc(u, v) {
            return Err(AcfmError::NotAMatching);
        }
        if mate[u].is_some() || mate[v].is_some() {
            return Err(AcfmError::NotAMatching);
        }
        mate[u] = Some(v);
        mate[v] = Some(u);
    }
    Ok(mate)
}

/// Whether `matching` is a matching of `graph` without alternating cycles.
///
/// General graphs use an exhaustive search for a simple alternating cycle.
/// Bipartite graphs use two polynomial routes whose answers must agree: a
/// directed-cycle search in the graph `u -> w` for unmatched arcs
/// `mate(u)-w` between side-one nodes, and repeated removal of a matched
/// node whose only matched neighbour is its mate.
pub fn is_alternating_cycle_free(graph: &Graph, matching: &[(usize, usize)]) -> Result<bool, AcfmError> {
    let mate = mates(graph, matching)?;
    let sides = match graph.partition() {
        Some(p) => Some(p.to_vec()),
        None => graph.two_coloring(),
    };
    match sides {
        Some(sides) => {
            let direct = !bipartite_has_alternating_cycle(graph, &mate, &sides);
            let peeled = peels_to_empty(graph, &mate);
            assert_eq!(direct, peeled, "alternating-cycle routes disagree on a bipartite graph");
            Ok(direct)
        }
        None => Ok(!general_has_alternating_cycle(graph, &mate)),
    }
}

fn bipartite_has_alternating_cycle(graph: &Graph, mate: &[Option<usize>], sides: &[Side]) -> bool {
    let n = graph.node_count();
    let nodes: Vec<usize> = (0..n).filter(|&u| sides[u] == Side::One && mate[u].is_some()).collect();
    let mut indeg = vec![0usize; n];
    let succ = |u: usize| {
        let mu = mate[u].expect("matched");
        graph.neighbors(mu).iter().copied().filter(move |&w| w != u && mate[w].is_some())
    };
    for &u in &nodes {
        for w in succ(u) {
            indeg[w] += 1;
        }
    }
    let mut stack: Vec<usize> = nodes.iter().copied().filter(|&u| indeg[u] == 0).collect();
    let mut removed = 0;
    while let Some(u) = stack.pop() {
        removed += 1;
        for w in succ(u) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                stack.push(w);
            }
        }
    }
    removed != nodes.len()
}

fn peels_to_empty(graph: &Graph, mate: &[Option<usize>]) -> bool {
    let n = graph.node_count();
    let mut alive: Vec<bool> = mate.iter().map(Option::is_some).collect();
    let mut deg: Vec<usize> =
        (0..n).map(|v| if alive[v] { graph.neighbors(v).iter().filter(|&&w| alive[w]).count() } else { 0 }).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] == 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        let mv = mate[v].expect("matched");
        for x in [v, mv] {
            alive[x] = false;
        }
        for x in [v, mv] {
            for &w in graph.neighbors(x) {
                if alive[w] {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        stack.push(w);
                    }
                }
            }
        }
    }
    !alive.iter().any(|&a| a)
}

fn general_has_alternating_cycle(graph: &Graph, mate: &[Option<usize>]) -> bool {
    fn search(
        graph: &Graph,
        mate: &[Option<usize>],
        visited: &mut [bool],
        start: usize,
        at: usize,
        len: usize,
    ) -> bool {
        // `at` was reached through its matched arc; leave through an unmatched one.
        for &w in graph.neighbors(at) {
            if Some(w) == mate[at] {
                continue;
            }
            if w == start {
                if len >= 3 {
                    return true;
                }
                continue;
            }
            if w < start || visited[w] {
                continue;
            }
            let Some(mw) = mate[w] else { continue };
            if mw < start || visited[mw] {
                continue;
            }
            visited[w] = true;
            visited[mw] = true;
            if search(graph, mate, visited, start, mw, len + 2) {
                return true;
            }
            visited[w] = false;
            visited[mw] = false;
        }
        false
    }
    let n = graph.node_count();
    let mut visited = vec![false; n];
    for s in 0..n {
        let Some(ms) = mate[s] else { continue };
        if ms < s {
            continue;
        }
        // Both orientations of the cycle through the matched arc s-ms are
        // covered by starting at its lower end and walking the arc first.
        visited[s] = true;
        visited[ms] = true;
        if search(graph, mate, &mut visited, s, ms, 1) {
            return true;
        }
        visited[s] = false;
        visited[ms] = false;
    }
    false
}

/// Exhaustive maximum alternating cycle-free matching, for graphs with at
/// most [`DEFAULT_BRUTE_FORCE_ARC_LIMIT`] arcs.
pub fn brute_force_acfm(graph: &Graph) -> Result<AcfmSolution, AcfmError> {
    brute_force_acfm_with_limit(graph, DEFAULT_BRUTE_FORCE_ARC_LIMIT)
}

/// [`brute_force_acfm`] with a caller-chosen arc limit.
///
/// Matchings are enumerated by branching on each arc in order; a branch is
/// cut as soon as its matching has an alternating cycle, since adding arcs
/// never removes one.
pub fn brute_force_acfm_with_limit(graph: &Graph, arc_limit: usize) -> Result<AcfmSolution, AcfmError> {
    if graph.arc_count() > arc_limit {
        return Err(AcfmError::TooLarge { arcs: graph.arc_count(), limit: arc_limit });
    }
    struct Search<'a> {
        graph: &'a Graph,
        used: Vec<bool>,
        current: Vec<(usize, usize)>,
        best: Vec<(usize, usize)>,
    }
    impl Search<'_> {
        fn run(&mut self, i: usize) {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            let arcs = self.graph.arcs();
            let free = self.used.iter().filter(|&&u| !u).count();
            if self.current.len() + free / 2 <= self.best.len() {
                return;
            }
            for j in i..arcs.len() {
                let (u, v) = arcs[j];
                if self.used[u] || self.used[v] {
                    continue;
                }
                self.current.push((u, v));
                if is_alternating_cycle_free(self.graph, &self.current).expect("branch holds a matching") {
                    self.used[u] = true;
                    self.used[v] = true;
                    self.run(j + 1);
                    self.used[u] = false;
                    self.used[v] = false;
                }
                self.current.pop();
            }
        }
    }
    let mut s = Search { graph, used: vec![false; graph.node_count()], current: Vec::new(), best: Vec::new() };
    s.run(0);
    let witness = s.best;
    Ok(AcfmSolution {
        size: witness.len(),
        unmatched_side_one: unmatched_side_one(graph, &witness),
        witness,
        stats: DpStats::default(),
    })
}
