//! The spanning tree auxiliary graph: one vertex per spanning tree, adjacent
//! when the two trees differ by a single edge exchange.

use std::collections::{BTreeSet, HashMap};

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{
    is_connected, minimal_edge_cuts, simple_cycles, EdgeId, Graph, VertexId, DEFAULT_MAX_N,
};
use crate::spanning::{enumerate_spanning_trees, fundamental_cuts, SpanningTree};

#[derive(Clone, Debug)]
pub struct StagGraph {
    graph: Graph,
    trees: Option<Vec<SpanningTree>>,
    origin: Option<Graph>,
}

impl StagGraph {
    /// Wraps a graph with no tree annotations, e.g. a recognition input.
    pub fn unannotated(graph: Graph) -> Self {
        StagGraph {
            graph,
            trees: None,
            origin: None,
        }
    }

    /// Wraps `graph` whose vertex `i` stands for `trees[i]` of `origin`.
    pub fn annotated(graph: Graph, trees: Vec<SpanningTree>, origin: Graph) -> Self {
        assert_eq!(graph.vertex_count(), trees.len());
        StagGraph {
            graph,
            trees: Some(trees),
            origin: Some(origin),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn trees(&self) -> Option<&[SpanningTree]> {
        self.trees.as_deref()
    }

    pub fn origin(&self) -> Option<&Graph> {
        self.origin.as_ref()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn annotations(&self) -> Result<(&[SpanningTree], &Graph)> {
        match (&self.trees, &self.origin) {
            (Some(t), Some(o)) => Ok((t, o)),
            _ => Err(Error::Unannotated),
        }
    }

    /// `{"vertices": [tree edge-id lists or null], "edges": [[i, j], ...]}`
    pub fn to_json_value(&self) -> Value {
        let vertices: Vec<Value> = match &self.trees {
            Some(ts) => ts.iter().map(|t| json!(t.edges())).collect(),
            None => vec![Value::Null; self.vertex_count()],
        };
        json!({
            "vertices": vertices,
            "edges": self.graph.edges().iter().map(|&(u, v)| json!([u, v])).collect::<Vec<_>>(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("stag JSON is serializable") + "\n"
    }

    /// DOT export; tree labels become vertex tooltips.
    pub fn to_dot(&self) -> String {
        self.graph
            .to_dot_with(|v| self.trees.as_ref().map(|ts| ts[v].to_string()))
    }
}

/// Builds `Aux(g)`: vertices are the spanning trees in canonical-key order,
/// edges come from the Type II neighbors of each tree, in sorted order.
pub fn build_stag(g: &Graph, max_trees: usize) -> Result<StagGraph> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let trees = enumerate_spanning_trees(g, max_trees)?;
    let index: HashMap<&SpanningTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut pairs = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for (f, crossing) in fundamental_cuts(g, t) {
            for e in crossing {
                let j = index[&t.exchange(f, e)];
                if i < j {
                    pairs.push((i, j));
                }
            }
        }
    }
    pairs.sort_unstable();
    let aux = Graph::from_edges(trees.len(), &pairs).expect("each exchange pair is found once from i");
    Ok(StagGraph::annotated(aux, trees, g.clone()))
}

/// The two clique partitions of one neighborhood in `Aux(G)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighborhoodPartitions {
    /// One entry per tree edge `f`: neighbors obtained by removing `f`.
    pub cut_classes: Vec<(EdgeId, Vec<VertexId>)>,
    /// One entry per non-tree edge `e`: neighbors obtained by adding `e`.
    pub cycle_classes: Vec<(EdgeId, Vec<VertexId>)>,
}

pub fn neighborhood_partitions(s: &StagGraph, v: VertexId) -> Result<NeighborhoodPartitions> {
    let (trees, origin) = s.annotations()?;
    let t = &trees[v];
    let mut cut: Vec<(EdgeId, Vec<VertexId>)> = t.edges().iter().map(|&f| (f, Vec::new())).collect();
    let mut cyc: Vec<(EdgeId, Vec<VertexId>)> = t.non_tree_edges(origin).map(|e| (e, Vec::new())).collect();
    for w in s.graph.neighbors(v) {
        let (removed, added) = t.difference(&trees[w]);
        debug_assert!(removed.len() == 1 && added.len() == 1);
        let ci = cut.iter().position(|(f, _)| *f == removed[0]).unwrap();
        cut[ci].1.push(w);
        let yi = cyc.iter().position(|(e, _)| *e == added[0]).unwrap();
        cyc[yi].1.push(w);
    }
    Ok(NeighborhoodPartitions {
        cut_classes: cut,
        cycle_classes: cyc,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum CliqueTag {
    Cycle,
    Cut,
    Undetermined,
}

/// A clique of a (candidate) auxiliary graph with its structural origin.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CliqueClass {
    pub members: Vec<VertexId>,
    pub tag: CliqueTag,
}

impl CliqueClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Cliques predicted by the structure of the origin graph: for every cycle
/// `C` and every tree holding all but one edge of `C`, the `|C|` trees that
/// omit one edge of `C`; for every minimal cut `E` and every tree crossing it
/// once, the `|E|` trees that reconnect across `E`. Cut cliques of size one
/// (bridges) are left out. Sorted and deduplicated by `(members, tag)`.
pub fn ground_truth_cliques(s: &StagGraph) -> Result<Vec<CliqueClass>> {
    let (trees, origin) = s.annotations()?;
    let index: HashMap<&SpanningTree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut out = BTreeSet::new();
    let cycles = simple_cycles(origin, DEFAULT_MAX_N)?;
    let cuts = minimal_edge_cuts(origin, DEFAULT_MAX_N)?;
    for t in trees {
        for cycle in &cycles {
            let missing: Vec<EdgeId> = cycle.iter().copied().filter(|&e| !t.contains(e)).collect();
            if let [absent] = missing[..] {
                let mut members: Vec<VertexId> = cycle
                    .iter()
                    .map(|&c| if c == absent { index[t] } else { index[&t.exchange(c, absent)] })
                    .collect();
                members.sort_unstable();
                out.insert(CliqueClass {
                    members,
                    tag: CliqueTag::Cycle,
                });
            }
        }
        for cut in &cuts {
            if cut.edge_ids.len() < 2 {
                continue;
            }
            let crossing: Vec<EdgeId> = cut.edge_ids.iter().copied().filter(|&e| t.contains(e)).collect();
            if let [present] = crossing[..] {
                let mut members: Vec<VertexId> = cut
                    .edge_ids
                    .iter()
                    .map(|&e| index[&t.exchange(present, e)])
                    .collect();
                members.sort_unstable();
                out.insert(CliqueClass {
                    members,
                    tag: CliqueTag::Cut,
                });
            }
        }
    }
    Ok(out.into_iter().collect())
}
