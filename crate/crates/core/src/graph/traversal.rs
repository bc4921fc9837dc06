use std::collections::VecDeque;

use super::{EdgeId, Graph, VertexId};

/// Component label per vertex, numbered in order of lowest vertex id.
pub fn components(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut label = vec![usize::MAX; n];
    let mut next = 0;
    let mut queue = VecDeque::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = next;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = next;
                    queue.push_back(w);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn is_connected(g: &Graph) -> bool {
    g.vertex_count() > 0 && components(g).iter().all(|&c| c == 0)
}

/// BFS distances from `source`; unreachable vertices get `usize::MAX`.
pub fn bfs_distances(g: &Graph, source: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(v) = queue.pop_front() {
        for w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Edge sequence of the unique `from`-`to` path inside the forest spanned by
/// `tree_edges`, or `None` if the two vertices are in different trees.
pub fn tree_path(
    g: &Graph,
    tree_edges: &[EdgeId],
    from: VertexId,
    to: VertexId,
) -> Option<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
    for &e in tree_edges {
        let (u, v) = g.endpoints(e);
        adj[u].push((v, e));
        adj[v].push((u, e));
    }
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, e) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut cur = to;
    while let Some((p, e)) = parent[cur] {
        path.push(e);
        cur = p;
    }
    path.reverse();
    Some(path)
}
