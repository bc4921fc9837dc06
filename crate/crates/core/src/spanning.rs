//! Spanning trees: enumeration over the edge-exchange structure, the
//! Matrix-Tree count, both unit transformations, the two-edge witness scan
//! and reverse-delete tree construction.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{block_decomposition, is_connected, is_two_connected, tree_path, EdgeId, Graph};

/// Default cap on the number of spanning trees materialized at once.
pub const DEFAULT_MAX_TREES: usize = 100_000;

/// Spanning tree of some host graph, stored as its sorted edge ids. The
/// derived ordering is the canonical key order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SpanningTree {
    edges: Vec<EdgeId>,
}

impl SpanningTree {
    /// Validates that `edges` spans `g` without a cycle.
    pub fn new(g: &Graph, mut edges: Vec<EdgeId>) -> Result<Self> {
        edges.sort_unstable();
        edges.dedup();
        if let Some(&e) = edges.iter().find(|&&e| e >= g.edge_count()) {
            return Err(Error::UnknownEdge(e));
        }
        if edges.len() + 1 != g.vertex_count() {
            return Err(Error::NotASpanningTree(format!(
                "{} edges for {} vertices",
                edges.len(),
                g.vertex_count()
            )));
        }
        let mut parent: Vec<usize> = g.vertices().collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            let (ru, rv) = (root(&mut parent, u), root(&mut parent, v));
            if ru == rv {
                return Err(Error::NotASpanningTree(format!("edge {e} closes a cycle")));
            }
            parent[ru] = rv;
        }
        Ok(SpanningTree { edges })
    }

    pub(crate) fn from_sorted_unchecked(edges: Vec<EdgeId>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        SpanningTree { edges }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// The canonical key: the sorted edge-id tuple.
    pub fn key(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Tree with `removed` swapped out for `added`.
    pub fn exchange(&self, removed: EdgeId, added: EdgeId) -> SpanningTree {
        let mut edges: Vec<EdgeId> = self.edges.iter().copied().filter(|&e| e != removed).collect();
        let pos = edges.partition_point(|&e| e < added);
        edges.insert(pos, added);
        SpanningTree { edges }
    }

    pub fn symmetric_difference_len(&self, other: &SpanningTree) -> usize {
        let common = self.edges.iter().filter(|e| other.contains(**e)).count();
        self.edges.len() + other.edges.len() - 2 * common
    }

    /// Edges of `self` not in `other`, and edges of `other` not in `self`.
    pub fn difference(&self, other: &SpanningTree) -> (Vec<EdgeId>, Vec<EdgeId>) {
        let only_self = self.edges.iter().copied().filter(|&e| !other.contains(e)).collect();
        let only_other = other.edges.iter().copied().filter(|&e| !self.contains(e)).collect();
        (only_self, only_other)
    }

    pub fn non_tree_edges<'g>(&'g self, g: &'g Graph) -> impl Iterator<Item = EdgeId> + 'g {
        g.edge_ids().filter(move |&e| !self.contains(e))
    }

    /// Parses the `t: id1,id2,...` line format.
    pub fn parse_line(g: &Graph, line: &str) -> Result<Self> {
        let body = line
            .trim()
            .strip_prefix("t:")
            .ok_or_else(|| Error::parse(0, "tree line must start with `t:`"))?;
        let edges = body
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<EdgeId>().map_err(|e| Error::parse(0, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        SpanningTree::new(g, edges)
    }
}

impl fmt::Display for SpanningTree {
    /// `t: id1,id2,...`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t: ")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Number of spanning trees as a Laplacian cofactor, computed with
/// fraction-free (Bareiss) elimination over arbitrary-precision integers.
pub fn count_spanning_trees(g: &Graph) -> BigUint {
    let n = g.vertex_count();
    if n <= 1 {
        return BigUint::from(n as u32);
    }
    let k = n - 1;
    let mut a = vec![vec![BigInt::zero(); k]; k];
    for (v, row) in a.iter_mut().enumerate() {
        row[v] = BigInt::from(g.degree(v));
    }
    for &(u, v) in g.edges() {
        if u < k && v < k {
            a[u][v] -= 1;
            a[v][u] -= 1;
        }
    }
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for p in 0..k {
        if a[p][p].is_zero() {
            let Some(swap) = (p + 1..k).find(|&r| !a[r][p].is_zero()) else {
                return BigUint::zero();
            };
            a.swap(p, swap);
            sign = -sign;
        }
        for i in p + 1..k {
            for j in p + 1..k {
                let t = &a[i][j] * &a[p][p] - &a[i][p] * &a[p][j];
                a[i][j] = t / &prev;
            }
        }
        prev = a[p][p].clone();
    }
    let det = a[k - 1][k - 1].clone() * sign;
    det.to_biguint().unwrap_or_default()
}

/// Fails with `TooManyTrees` when the Kirchhoff count exceeds `limit`.
pub fn check_tree_budget(g: &Graph, limit: usize) -> Result<usize> {
    let count = count_spanning_trees(g);
    match count.to_usize() {
        Some(c) if c <= limit => Ok(c),
        _ => Err(Error::TooManyTrees {
            count: count.to_string(),
            limit,
        }),
    }
}

/// Spanning tree found by depth-first search from vertex 0.
pub fn dfs_tree(g: &Graph) -> Result<SpanningTree> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut seen = vec![false; g.vertex_count()];
    let mut edges = Vec::new();
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(&v) = stack.last() {
        match g.incident(v).iter().find(|&&(w, _)| !seen[w]) {
            Some(&(w, e)) => {
                seen[w] = true;
                edges.push(e);
                stack.push(w);
            }
            None => {
                stack.pop();
            }
        }
    }
    edges.sort_unstable();
    Ok(SpanningTree { edges })
}

/// Every spanning tree of `g` exactly once, sorted by canonical key.
/// Explores the exchange structure breadth-first from a DFS tree.
pub fn enumerate_spanning_trees(g: &Graph, limit: usize) -> Result<Vec<SpanningTree>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let expected = check_tree_budget(g, limit)?;
    let start = dfs_tree(g)?;
    let mut seen: HashSet<SpanningTree> = HashSet::with_capacity(expected);
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start);
    while let Some(t) = queue.pop_front() {
        for next in type2_neighbors(g, &t) {
            if !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut trees: Vec<SpanningTree> = seen.into_iter().collect();
    trees.sort_unstable();
    debug_assert_eq!(trees.len(), expected);
    Ok(trees)
}

/// Unique cycle of `t + e` as an edge sequence starting with `e`.
pub fn fundamental_cycle(g: &Graph, t: &SpanningTree, e: EdgeId) -> Result<Vec<EdgeId>> {
    if e >= g.edge_count() {
        return Err(Error::UnknownEdge(e));
    }
    if t.contains(e) {
        return Err(Error::EdgeInTree(e));
    }
    let (u, v) = g.endpoints(e);
    let path = tree_path(g, t.edges(), v, u)
        .ok_or_else(|| Error::NotASpanningTree("tree does not span the graph".into()))?;
    let mut cycle = Vec::with_capacity(path.len() + 1);
    cycle.push(e);
    cycle.extend(path);
    Ok(cycle)
}

/// Type I: add a non-tree edge, delete another edge of the cycle it closes.
pub fn type1_neighbors(g: &Graph, t: &SpanningTree) -> BTreeSet<SpanningTree> {
    let mut out = BTreeSet::new();
    for e in t.non_tree_edges(g) {
        let cycle = fundamental_cycle(g, t, e).expect("e is a non-tree edge");
        for &f in &cycle[1..] {
            out.insert(t.exchange(f, e));
        }
    }
    out
}

/// Side labels (`false`/`true`) of the two subtrees of `t - removed`.
fn split_sides(g: &Graph, t: &SpanningTree, adj: &[Vec<(usize, EdgeId)>], removed: EdgeId) -> Vec<bool> {
    let mut side = vec![false; g.vertex_count()];
    let (root, _) = g.endpoints(removed);
    side[root] = true;
    let mut stack = vec![root];
    while let Some(v) = stack.pop() {
        for &(w, e) in &adj[v] {
            if e != removed && !side[w] {
                side[w] = true;
                stack.push(w);
            }
        }
    }
    debug_assert!(t.contains(removed));
    side
}

fn tree_adjacency(g: &Graph, t: &SpanningTree) -> Vec<Vec<(usize, EdgeId)>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for &e in t.edges() {
        let (u, v) = g.endpoints(e);
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    adj
}

/// For each tree edge `f`, the non-tree edges reconnecting `t - f`, in
/// ascending id order. Entries follow `t.edges()`.
pub fn fundamental_cuts(g: &Graph, t: &SpanningTree) -> Vec<(EdgeId, Vec<EdgeId>)> {
    let adj = tree_adjacency(g, t);
    t.edges()
        .iter()
        .map(|&f| {
            let side = split_sides(g, t, &adj, f);
            let crossing = t
                .non_tree_edges(g)
                .filter(|&e| {
                    let (u, v) = g.endpoints(e);
                    side[u] != side[v]
                })
                .collect();
            (f, crossing)
        })
        .collect()
}

/// Type II: delete a tree edge, reconnect the two halves with another edge.
pub fn type2_neighbors(g: &Graph, t: &SpanningTree) -> BTreeSet<SpanningTree> {
    let mut out = BTreeSet::new();
    for (f, crossing) in fundamental_cuts(g, t) {
        for e in crossing {
            out.insert(t.exchange(f, e));
        }
    }
    out
}

/// A non-tree edge whose fundamental cycle contains both `e1` and `e2`, found
/// by scanning non-tree edges in ascending id order.
pub fn witness_edge_for_pair(g: &Graph, t: &SpanningTree, e1: EdgeId, e2: EdgeId) -> Result<EdgeId> {
    if !is_two_connected(g) || g.vertex_count() == 2 {
        return Err(Error::NotTwoConnected);
    }
    for e in [e1, e2] {
        if !t.contains(e) {
            return Err(Error::EdgeNotInTree(e));
        }
    }
    for e in t.non_tree_edges(g) {
        let cycle = fundamental_cycle(g, t, e)?;
        if cycle.contains(&e1) && cycle.contains(&e2) {
            return Ok(e);
        }
    }
    Err(Error::NoWitness(e1, e2))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReverseDeleteRun {
    pub tree: SpanningTree,
    /// Deleted edges in deletion order.
    pub trace: Vec<EdgeId>,
}

/// True when the host edges `kept` contain a cycle through both `e1` and `e2`,
/// i.e. when both are non-bridges of the same block of that subgraph.
pub(crate) fn has_cycle_through(g: &Graph, kept: &[EdgeId], e1: EdgeId, e2: EdgeId) -> bool {
    let all: Vec<usize> = g.vertices().collect();
    let sub = g.subgraph(&all, kept);
    let (Ok(i1), Ok(i2)) = (kept.binary_search(&e1), kept.binary_search(&e2)) else {
        return false;
    };
    let Ok(dec) = block_decomposition(&sub) else {
        return false;
    };
    dec.blocks
        .iter()
        .any(|b| b.edges.len() > 1 && b.edges.contains(&i1) && b.edges.contains(&i2))
}

/// Reverse-delete: scan edges by ascending id and delete every edge that
/// still lies on a cycle of the surviving graph.
///
/// With a protected pair the scan never deletes `e1` or `e2`, and defers any
/// edge whose removal would leave no cycle through both. After the scan the
/// survivors are a spanning tree plus one edge whose cycle holds `e1` and
/// `e2`; deleting the smallest other edge of that cycle is the last step.
pub fn reverse_delete_tree(g: &Graph, protected_pair: Option<(EdgeId, EdgeId)>) -> Result<ReverseDeleteRun> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut kept: Vec<EdgeId> = g.edge_ids().collect();
    let mut trace = Vec::new();
    let is_bridge = |kept: &[EdgeId], e: EdgeId| {
        let rest: Vec<EdgeId> = kept.iter().copied().filter(|&f| f != e).collect();
        let (u, v) = g.endpoints(e);
        !tree_path_exists(g, &rest, u, v)
    };

    if let Some((e1, e2)) = protected_pair {
        if e1 == e2 || e1.max(e2) >= g.edge_count() {
            return Err(Error::UnknownEdge(e1.max(e2)));
        }
        if !is_two_connected(g) || g.vertex_count() == 2 {
            return Err(Error::NotTwoConnected);
        }
        for e in g.edge_ids() {
            if e == e1 || e == e2 || is_bridge(&kept, e) {
                continue;
            }
            let rest: Vec<EdgeId> = kept.iter().copied().filter(|&f| f != e).collect();
            if has_cycle_through(g, &rest, e1, e2) {
                kept = rest;
                trace.push(e);
            }
        }
        let last = kept
            .iter()
            .copied()
            .find(|&e| e != e1 && e != e2 && !is_bridge(&kept, e))
            .ok_or(Error::NoWitness(e1, e2))?;
        kept.retain(|&f| f != last);
        trace.push(last);
    } else {
        for e in g.edge_ids() {
            if !is_bridge(&kept, e) {
                kept.retain(|&f| f != e);
                trace.push(e);
            }
        }
    }
    if kept.len() + 1 != g.vertex_count() {
        return Err(Error::ValidationFailed("reverse-delete left a cycle".into()));
    }
    Ok(ReverseDeleteRun {
        tree: SpanningTree::from_sorted_unchecked(kept),
        trace,
    })
}

fn tree_path_exists(g: &Graph, edges: &[EdgeId], u: usize, v: usize) -> bool {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for &e in edges {
        let (a, b) = g.endpoints(e);
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; g.vertex_count()];
    seen[u] = true;
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        if x == v {
            return true;
        }
        for &w in &adj[x] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}
