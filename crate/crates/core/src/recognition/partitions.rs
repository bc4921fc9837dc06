use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{maximal_cliques_within, Graph, VertexId};

/// Cap on the number of role assignments kept per vertex.
pub const MAX_SPLITS: usize = 8;

/// The two clique partitions of `N(x)`. Each neighbour lies in exactly one
/// cut class and one cycle class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodSplit {
    pub cut: Vec<Vec<VertexId>>,
    pub cycle: Vec<Vec<VertexId>>,
}

impl NeighborhoodSplit {
    /// Vertex count of the preimage this split implies.
    pub fn n(&self) -> usize {
        self.cut.len() + 1
    }

    /// Edge count of the preimage this split implies.
    pub fn m(&self) -> usize {
        self.cut.len() + self.cycle.len()
    }
}

/// Every consistent pair of partitions of `N(x)`, largest implied `n` first.
///
/// `H[N(x)]` of a genuine STAG is the line graph of a bipartite graph (tree
/// edges against non-tree edges), so every neighbour sits in at most two
/// maximal cliques and exactly one of them must be its cycle class. That is
/// a 2-colouring of the clique overlap graph; neighbours in a single maximal
/// clique force it to be a cycle class and get a singleton cut class.
pub fn neighborhood_splits(h: &Graph, x: VertexId) -> Result<Vec<NeighborhoodSplit>> {
    let nbrs: Vec<VertexId> = h.neighbors(x).collect();
    if nbrs.is_empty() {
        return if h.vertex_count() == 1 {
            Ok(vec![NeighborhoodSplit {
                cut: Vec::new(),
                cycle: Vec::new(),
            }])
        } else {
            Err(Error::Disconnected)
        };
    }
    let cliques = maximal_cliques_within(h, &nbrs);
    if let Some(c) = cliques.iter().find(|c| c.len() == 1) {
        return Err(Error::not_a_stag(format!(
            "neighbour {} of {} lies on no triangle through {}",
            h.name(c[0]),
            h.name(x),
            h.name(x)
        )));
    }
    let mut member: Vec<Vec<usize>> = vec![Vec::new(); h.vertex_count()];
    for (i, c) in cliques.iter().enumerate() {
        for &w in c {
            member[w].push(i);
        }
    }
    for (i, a) in cliques.iter().enumerate() {
        for b in &cliques[i + 1..] {
            if a.iter().filter(|w| b.contains(w)).count() > 1 {
                return Err(Error::not_a_stag(format!(
                    "two maximal cliques in the neighbourhood of {} share an edge",
                    h.name(x)
                )));
            }
        }
    }

    // colour[q]: Some(true) = cycle class
    let k = cliques.len();
    let mut differ: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut forced = vec![false; k];
    for &w in &nbrs {
        match member[w][..] {
            [q] => forced[q] = true,
            [a, b] => {
                differ[a].push(b);
                differ[b].push(a);
            }
            _ => {
                return Err(Error::not_a_stag(format!(
                    "neighbour {} of {} lies in {} maximal cliques",
                    h.name(w),
                    h.name(x),
                    member[w].len()
                )))
            }
        }
    }
    let mut comp = vec![usize::MAX; k];
    let mut parity = vec![false; k];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..k {
        if comp[s] != usize::MAX {
            continue;
        }
        let id = comps.len();
        comps.push(vec![s]);
        comp[s] = id;
        let mut stack = vec![s];
        while let Some(q) = stack.pop() {
            for &r in &differ[q] {
                if comp[r] == usize::MAX {
                    comp[r] = id;
                    parity[r] = !parity[q];
                    comps[id].push(r);
                    stack.push(r);
                } else if parity[r] == parity[q] {
                    return Err(Error::not_a_stag(format!(
                        "no consistent double partition of the neighbourhood of {}",
                        h.name(x)
                    )));
                }
            }
        }
    }
    // For each component, the parities that may be the cycle side.
    let mut options: Vec<Vec<bool>> = Vec::new();
    for members in &comps {
        let mut opts = Vec::new();
        for side in [false, true] {
            if members.iter().all(|&q| !forced[q] || parity[q] == side) {
                opts.push(side);
            }
        }
        if opts.is_empty() {
            return Err(Error::not_a_stag(format!(
                "no consistent double partition of the neighbourhood of {}",
                h.name(x)
            )));
        }
        options.push(opts);
    }

    let mut out = Vec::new();
    let mut choice = vec![0usize; comps.len()];
    loop {
        let is_cycle: Vec<bool> = (0..k).map(|q| parity[q] == options[comp[q]][choice[comp[q]]]).collect();
        if let Some(split) = assemble(h, &nbrs, &cliques, &member, &is_cycle) {
            out.push(split);
        }
        if out.len() >= MAX_SPLITS {
            break;
        }
        // odometer over component choices
        let mut i = 0;
        while i < comps.len() && choice[i] + 1 == options[i].len() {
            choice[i] = 0;
            i += 1;
        }
        if i == comps.len() {
            break;
        }
        choice[i] += 1;
    }
    if out.is_empty() {
        return Err(Error::not_a_stag(format!(
            "no consistent double partition of the neighbourhood of {}",
            h.name(x)
        )));
    }
    out.sort_by(|a, b| b.n().cmp(&a.n()).then_with(|| a.cut.cmp(&b.cut)));
    out.dedup();
    Ok(out)
}

fn assemble(
    h: &Graph,
    nbrs: &[VertexId],
    cliques: &[Vec<VertexId>],
    member: &[Vec<usize>],
    is_cycle: &[bool],
) -> Option<NeighborhoodSplit> {
    let mut cycle: Vec<Vec<VertexId>> = Vec::new();
    let mut cut: Vec<Vec<VertexId>> = Vec::new();
    for (q, c) in cliques.iter().enumerate() {
        if is_cycle[q] {
            cycle.push(c.clone());
        } else {
            cut.push(c.clone());
        }
    }
    for &w in nbrs {
        if member[w].iter().all(|&q| is_cycle[q]) {
            cut.push(vec![w]);
        }
    }
    cut.sort();
    cycle.sort();
    // Backstop: neighbours are adjacent exactly when they share a class.
    let class_of = |classes: &[Vec<VertexId>], w: VertexId| classes.iter().position(|c| c.contains(&w));
    let cut_id: Vec<Option<usize>> = nbrs.iter().map(|&w| class_of(&cut, w)).collect();
    let cyc_id: Vec<Option<usize>> = nbrs.iter().map(|&w| class_of(&cycle, w)).collect();
    for i in 0..nbrs.len() {
        if cut_id[i].is_none() || cyc_id[i].is_none() {
            return None;
        }
        for j in i + 1..nbrs.len() {
            let shared = (cut_id[i] == cut_id[j]) as u8 + (cyc_id[i] == cyc_id[j]) as u8;
            if shared > 1 || (shared == 1) != h.has_edge(nbrs[i], nbrs[j]) {
                return None;
            }
        }
    }
    Some(NeighborhoodSplit { cut, cycle })
}

/// The split with the largest implied preimage vertex count.
pub fn recover_neighborhood_partitions(h: &Graph, x: VertexId) -> Result<NeighborhoodSplit> {
    Ok(neighborhood_splits(h, x)?.remove(0))
}

/// Preimage size read off the neighbourhood partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InferredParams {
    pub n: usize,
    pub m: usize,
    /// Other `(n, m)` pairs every vertex also supports, e.g. from a planar
    /// dual preimage.
    pub alternatives: Vec<(usize, usize)>,
    /// `per_vertex_partitions[v]` is the split at `v` matching `(n, m)`.
    pub per_vertex_partitions: Vec<NeighborhoodSplit>,
}

/// Intersects the `(n, m)` candidates of all vertices. Fails when no pair is
/// supported everywhere.
pub fn infer_params(h: &Graph) -> Result<InferredParams> {
    let mut all = Vec::with_capacity(h.vertex_count());
    let mut common: Option<BTreeSet<(usize, usize)>> = None;
    for x in h.vertices() {
        let splits = neighborhood_splits(h, x)?;
        let here: BTreeSet<(usize, usize)> = splits.iter().map(|s| (s.n(), s.m())).collect();
        common = Some(match common {
            None => here,
            Some(c) => c.intersection(&here).copied().collect(),
        });
        all.push(splits);
    }
    let mut candidates: Vec<(usize, usize)> = common.unwrap_or_default().into_iter().collect();
    if candidates.is_empty() {
        return Err(Error::not_a_stag("neighbourhoods imply inconsistent vertex and edge counts"));
    }
    candidates.sort_by(|a, b| b.cmp(a));
    let (n, m) = candidates[0];
    let per_vertex_partitions = all
        .into_iter()
        .map(|splits| splits.into_iter().find(|s| (s.n(), s.m()) == (n, m)).unwrap())
        .collect();
    Ok(InferredParams {
        n,
        m,
        alternatives: candidates[1..].to_vec(),
        per_vertex_partitions,
    })
}

/// A tree edge of the reconstruction: one cut class at the anchor, labelled
/// by the cycle classes it meets.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LabeledTreeEdge {
    pub cut_clique_id: usize,
    pub label: BTreeSet<usize>,
}

/// Labels the cut classes of `split`, checking that no two cycle classes
/// meet the same set of cut classes.
pub fn label_split(split: &NeighborhoodSplit) -> Result<Vec<LabeledTreeEdge>> {
    let items: Vec<LabeledTreeEdge> = split
        .cut
        .iter()
        .enumerate()
        .map(|(i, cut)| LabeledTreeEdge {
            cut_clique_id: i,
            label: (0..split.cycle.len())
                .filter(|&j| split.cycle[j].iter().any(|w| cut.contains(w)))
                .collect(),
        })
        .collect();
    if let Some(item) = items.iter().find(|i| i.label.is_empty()) {
        return Err(Error::not_a_stag(format!("cut class {} meets no cycle class", item.cut_clique_id)));
    }
    let mut seen = BTreeSet::new();
    for c in 0..split.cycle.len() {
        let edges: Vec<usize> = items.iter().filter(|i| i.label.contains(&c)).map(|i| i.cut_clique_id).collect();
        if !seen.insert(edges) {
            return Err(Error::not_a_stag("two cycle classes label the same set of tree edges"));
        }
    }
    Ok(items)
}

/// Labels at `x` using the split chosen by `params`.
pub fn label_cut_cliques(params: &InferredParams, x: VertexId) -> Result<Vec<LabeledTreeEdge>> {
    label_split(&params.per_vertex_partitions[x])
}
