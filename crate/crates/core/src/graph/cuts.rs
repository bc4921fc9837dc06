//! Cycle- and cut-structure queries. Everything except
//! [`common_cycle_classes`] is exhaustive search behind a vertex-count guard.

use super::{is_connected, tree_path, EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// An inclusion-minimal edge cut together with the vertex bipartition it
/// separates. `sides.0` always holds vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCut {
    pub edge_ids: Vec<EdgeId>,
    pub sides: (Vec<VertexId>, Vec<VertexId>),
}

fn guard(g: &Graph, max_n: usize) -> Result<()> {
    if g.vertex_count() > max_n {
        return Err(Error::TooLarge {
            what: "vertex count",
            size: g.vertex_count(),
            limit: max_n,
        });
    }
    Ok(())
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Classes of the "lie on a common cycle" relation, computed by merging the
/// edge sets of the fundamental cycles of a BFS tree. Classes are sorted and
/// ordered by smallest edge id.
pub fn common_cycle_classes(g: &Graph) -> Result<Vec<Vec<EdgeId>>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let tree = bfs_tree(g);
    let mut in_tree = vec![false; g.edge_count()];
    for &e in &tree {
        in_tree[e] = true;
    }
    let mut uf = UnionFind::new(g.edge_count());
    let mut on_cycle = vec![false; g.edge_count()];
    for e in g.edge_ids().filter(|&e| !in_tree[e]) {
        let (u, v) = g.endpoints(e);
        let path = tree_path(g, &tree, u, v).expect("tree spans a connected graph");
        on_cycle[e] = true;
        for f in path {
            on_cycle[f] = true;
            uf.union(e, f);
        }
    }
    if let Some(bridge) = g.edge_ids().find(|&e| !on_cycle[e]) {
        return Err(Error::HasBridge(bridge));
    }
    let mut classes: Vec<Vec<EdgeId>> = Vec::new();
    let mut slot = vec![usize::MAX; g.edge_count()];
    for e in g.edge_ids() {
        let r = uf.find(e);
        if slot[r] == usize::MAX {
            slot[r] = classes.len();
            classes.push(Vec::new());
        }
        classes[slot[r]].push(e);
    }
    Ok(classes)
}

pub(crate) fn bfs_tree(g: &Graph) -> Vec<EdgeId> {
    let mut seen = vec![false; g.vertex_count()];
    let mut tree = Vec::new();
    if g.vertex_count() == 0 {
        return tree;
    }
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0]);
    while let Some(v) = queue.pop_front() {
        for &(w, e) in g.incident(v) {
            if !seen[w] {
                seen[w] = true;
                tree.push(e);
                queue.push_back(w);
            }
        }
    }
    tree.sort_unstable();
    tree
}

fn induces_connected(g: &Graph, mask: u64, want: bool) -> bool {
    let n = g.vertex_count();
    let inside = |v: usize| ((mask >> v) & 1 == 1) == want;
    let Some(start) = (0..n).find(|&v| inside(v)) else {
        return false;
    };
    let mut seen = 1u64 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(v) {
            if inside(w) && seen & (1 << w) == 0 {
                seen |= 1 << w;
                stack.push(w);
            }
        }
    }
    (0..n).filter(|&v| inside(v)).all(|v| seen & (1 << v) != 0)
}

/// All inclusion-minimal edge cuts: one per bipartition whose two sides both
/// induce connected subgraphs.
pub fn minimal_edge_cuts(g: &Graph, max_n: usize) -> Result<Vec<EdgeCut>> {
    guard(g, max_n.min(63))?;
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut cuts = Vec::new();
    if n < 2 {
        return Ok(cuts);
    }
    // Vertex 0 is always on the `false` side so each bipartition is seen once.
    for mask in 1u64..(1u64 << (n - 1)) {
        let mask = mask << 1;
        if !induces_connected(g, mask, true) || !induces_connected(g, mask, false) {
            continue;
        }
        let edge_ids: Vec<EdgeId> = g
            .edge_ids()
            .filter(|&e| {
                let (u, v) = g.endpoints(e);
                ((mask >> u) & 1) != ((mask >> v) & 1)
            })
            .collect();
        let (a, b): (Vec<VertexId>, Vec<VertexId>) = g.vertices().partition(|&v| (mask >> v) & 1 == 0);
        cuts.push(EdgeCut {
            edge_ids,
            sides: (a, b),
        });
    }
    cuts.sort_by(|x, y| x.edge_ids.cmp(&y.edge_ids));
    cuts.dedup_by(|x, y| x.edge_ids == y.edge_ids);
    Ok(cuts)
}

/// Every simple cycle (length >= 3), each as its edge sequence starting at
/// the cycle's smallest vertex. Each cycle is reported once.
pub fn simple_cycles(g: &Graph, max_n: usize) -> Result<Vec<Vec<EdgeId>>> {
    guard(g, max_n)?;
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut verts = Vec::new();
    let mut edges = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &Graph,
        start: VertexId,
        v: VertexId,
        on_path: &mut [bool],
        verts: &mut Vec<VertexId>,
        edges: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        for &(w, e) in g.incident(v) {
            if w == start && edges.len() >= 2 && verts[1] < v {
                let mut cyc = edges.clone();
                cyc.push(e);
                out.push(cyc);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                verts.push(w);
                edges.push(e);
                extend(g, start, w, on_path, verts, edges, out);
                edges.pop();
                verts.pop();
                on_path[w] = false;
            }
        }
    }

    for s in 0..n {
        on_path[s] = true;
        verts.push(s);
        extend(g, s, s, &mut on_path, &mut verts, &mut edges, &mut out);
        verts.pop();
        on_path[s] = false;
    }
    Ok(out)
}

/// Length of a longest simple cycle.
pub fn circumference(g: &Graph, max_n: usize) -> Result<usize> {
    simple_cycles(g, max_n)?
        .iter()
        .map(Vec::len)
        .max()
        .ok_or(Error::Acyclic)
}

/// Number of connected components after deleting `removed`.
#[cfg(test)]
pub(crate) fn component_count_without(g: &Graph, removed: &[EdgeId]) -> usize {
    let h = g.without_edges(removed);
    super::components(&h).into_iter().max().map_or(0, |c| c + 1)
}
