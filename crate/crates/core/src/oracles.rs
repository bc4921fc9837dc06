//! Brute-force reference implementations. Slow by design; they share no
//! code path with the fast versions beyond the graph type.

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, is_connected, Graph, DEFAULT_ISO_LIMIT};
use crate::spanning::SpanningTree;
use crate::stag::StagGraph;

pub const MAX_ORACLE_EDGES: usize = 24;
pub const MAX_ORACLE_TREES: usize = 2000;
pub const MAX_PREIMAGE_N: usize = 7;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Every `(n-1)`-subset of edges that is acyclic, hence a spanning tree.
/// Sorted by edge list.
pub fn brute_force_trees(g: &Graph) -> Result<Vec<SpanningTree>> {
    let m = g.edge_count();
    if m > MAX_ORACLE_EDGES {
        return Err(Error::TooLarge {
            what: "edge count",
            size: m,
            limit: MAX_ORACLE_EDGES,
        });
    }
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Vec::new());
    }
    let want = n - 1;
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != want {
            continue;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        let mut acyclic = true;
        let edges: Vec<usize> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        for &e in &edges {
            let (u, v) = g.endpoints(e);
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                acyclic = false;
                break;
            }
            parent[a] = b;
        }
        if acyclic {
            out.push(SpanningTree::new(g, edges)?);
        }
    }
    out.sort();
    Ok(out)
}

/// `Aux(g)` by testing every pair of trees for symmetric difference 2.
pub fn brute_force_stag(g: &Graph) -> Result<StagGraph> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let trees = brute_force_trees(g)?;
    if trees.len() > MAX_ORACLE_TREES {
        return Err(Error::TooManyTrees {
            count: trees.len().to_string(),
            limit: MAX_ORACLE_TREES,
        });
    }
    let mut pairs = Vec::new();
    for i in 0..trees.len() {
        for j in i + 1..trees.len() {
            if trees[i].symmetric_difference_len(&trees[j]) == 2 {
                pairs.push((i, j));
            }
        }
    }
    let aux = Graph::from_edges(trees.len(), &pairs)?;
    Ok(StagGraph::annotated(aux, trees, g.clone()))
}

/// Spanning tree count by fraction-free elimination in `i128`, for the
/// small graphs scanned below.
fn small_tree_count(n: usize, edges: &[(usize, usize)]) -> i128 {
    if n <= 1 {
        return 1;
    }
    let k = n - 1;
    let mut a = vec![vec![0i128; k]; k];
    for &(u, v) in edges {
        for (x, y) in [(u, v), (v, u)] {
            if x < k {
                a[x][x] += 1;
                if y < k {
                    a[x][y] -= 1;
                }
            }
        }
    }
    let mut prev = 1i128;
    let mut sign = 1;
    for i in 0..k {
        if a[i][i] == 0 {
            let Some(p) = (i + 1..k).find(|&r| a[r][i] != 0) else {
                return 0;
            };
            a.swap(i, p);
            sign = -sign;
        }
        for r in i + 1..k {
            for c in i + 1..k {
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / prev;
            }
            a[r][i] = 0;
        }
        prev = a[i][i];
    }
    sign * a[k - 1][k - 1]
}

fn connected_mask(n: usize, adj: &[u32]) -> bool {
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen.count_ones() as usize == n
}

/// Searches every labelled bridgeless connected graph on at most `n_max`
/// vertices with `|V(h)|` spanning trees for one whose auxiliary graph is
/// isomorphic to `h`.
pub fn brute_force_is_stag(h: &Graph, n_max: usize) -> Result<Option<Graph>> {
    if n_max > MAX_PREIMAGE_N {
        return Err(Error::TooLarge {
            what: "preimage vertex bound",
            size: n_max,
            limit: MAX_PREIMAGE_N,
        });
    }
    let target = h.vertex_count();
    if target == 1 {
        return Ok(h.edge_count().eq(&0).then(|| Graph::new(1)));
    }
    let mut h_degrees = h.degree_sequence();
    h_degrees.sort_unstable();
    for n in 3..=n_max {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for mask in 0u32..(1u32 << slots.len()) {
            if (mask.count_ones() as usize) < n {
                continue;
            }
            let mut adj = vec![0u32; n];
            let edges: Vec<(usize, usize)> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            for &(u, v) in &edges {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            if adj.iter().any(|a| a.count_ones() < 2) || !connected_mask(n, &adj) {
                continue;
            }
            if small_tree_count(n, &edges) != target as i128 {
                continue;
            }
            let g = Graph::from_edges(n, &edges)?;
            if crate::graph::block_decomposition(&g)?.bridges().is_empty() {
                let aux = brute_force_stag(&g)?;
                if aux.graph().edge_count() != h.edge_count() {
                    continue;
                }
                let mut d = aux.graph().degree_sequence();
                d.sort_unstable();
                if d == h_degrees && are_isomorphic(aux.graph(), h, DEFAULT_ISO_LIMIT)? {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}
