use super::{Graph, VertexId};

fn intersect(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting). Each clique is
/// sorted; the list is sorted lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<VertexId>> {
    let nbrs: Vec<Vec<VertexId>> = g.vertices().map(|v| g.neighbors(v).collect()).collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(&nbrs, &mut r, g.vertices().collect(), Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

/// Maximal cliques of the subgraph induced by `subset`, in host ids.
pub fn maximal_cliques_within(g: &Graph, subset: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut sorted = subset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let nbrs: Vec<Vec<VertexId>> = sorted
        .iter()
        .map(|&v| {
            let hn: Vec<VertexId> = g.neighbors(v).collect();
            intersect(&hn, &sorted)
                .into_iter()
                .map(|w| sorted.binary_search(&w).unwrap())
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut r = Vec::new();
    expand(&nbrs, &mut r, (0..sorted.len()).collect(), Vec::new(), &mut out);
    let mut out: Vec<Vec<VertexId>> = out
        .into_iter()
        .map(|c| {
            let mut h: Vec<VertexId> = c.into_iter().map(|i| sorted[i]).collect();
            h.sort_unstable();
            h
        })
        .collect();
    out.sort();
    out
}

fn expand(
    nbrs: &[Vec<VertexId>],
    r: &mut Vec<VertexId>,
    mut p: Vec<VertexId>,
    mut x: Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| intersect(&p, &nbrs[u]).len())
        .unwrap();
    let candidates: Vec<VertexId> = p
        .iter()
        .copied()
        .filter(|v| nbrs[pivot].binary_search(v).is_err())
        .collect();
    for v in candidates {
        r.push(v);
        expand(nbrs, r, intersect(&p, &nbrs[v]), intersect(&x, &nbrs[v]), out);
        r.pop();
        p.retain(|&w| w != v);
        let pos = x.partition_point(|&w| w < v);
        x.insert(pos, v);
    }
}
