//! Simple undirected graphs with stable vertex and edge identifiers.
//!
//! Vertices are dense integers `0..n`; the name each vertex had in its source
//! file is kept in a side table and used only for output. Edge ids are the
//! positions of the edges in insertion order and never change for the
//! lifetime of a [`Graph`].

mod blocks;
mod cliques;
mod cuts;
pub mod families;
mod io;
mod iso;
mod product;
mod traversal;

use std::collections::HashMap;

use crate::error::{Error, Result};

pub use blocks::{block_decomposition, is_two_connected, Block, BlockDecomposition};
pub use cliques::{maximal_cliques, maximal_cliques_within};
pub use cuts::{circumference, common_cycle_classes, minimal_edge_cuts, simple_cycles, EdgeCut};
pub use io::{parse_graph, Format};
pub use iso::{are_isomorphic, find_isomorphism, DEFAULT_ISO_LIMIT};
pub use product::{cartesian_product, cartesian_product_all};
pub use traversal::{bfs_distances, components, is_connected, tree_path};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Default vertex bound for the exponential oracles (cut and cycle search).
pub const DEFAULT_MAX_N: usize = 12;

#[derive(Clone, Debug)]
pub struct Graph {
    names: Vec<String>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    index: HashMap<(VertexId, VertexId), EdgeId>,
}

impl PartialEq for Graph {
    /// Structural equality: same vertex count and the same edge list in the
    /// same id order. Vertex names are ignored.
    fn eq(&self, other: &Self) -> bool {
        self.vertex_count() == other.vertex_count() && self.edges == other.edges
    }
}

impl Eq for Graph {}

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// An edgeless graph on `n` vertices named `0..n`.
    pub fn new(n: usize) -> Self {
        Self::with_names((0..n).map(|i| i.to_string()).collect())
    }

    pub fn with_names(names: Vec<String>) -> Self {
        let n = names.len();
        Graph {
            names,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            index: HashMap::new(),
        }
    }

    /// Builds a graph from an edge list; edge ids follow list order.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(u, v).map_err(|e| match e {
                Error::Parse { reason, .. } => Error::parse(i + 1, reason),
                other => other,
            })?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> VertexId {
        self.names.push(name.into());
        self.adjacency.push(Vec::new());
        self.names.len() - 1
    }

    /// Adds the edge `uv` and returns its id. Self-loops, duplicate edges and
    /// unknown endpoints are rejected.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::parse(0, format!("edge ({u}, {v}) references a missing vertex")));
        }
        if u == v {
            return Err(Error::parse(0, format!("self-loop at {}", self.names[u])));
        }
        let k = key(u, v);
        if self.index.contains_key(&k) {
            return Err(Error::parse(
                0,
                format!("duplicate edge {} {}", self.names[u], self.names[v]),
            ));
        }
        let id = self.edges.len();
        self.edges.push(k);
        self.index.insert(k, id);
        let pos = self.adjacency[u].partition_point(|&(w, _)| w < v);
        self.adjacency[u].insert(pos, (v, id));
        let pos = self.adjacency[v].partition_point(|&(w, _)| w < u);
        self.adjacency[v].insert(pos, (u, id));
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of `e` with the smaller vertex id first.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> std::ops::Range<EdgeId> {
        0..self.edges.len()
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.index.get(&key(u, v)).copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.index.contains_key(&key(u, v))
    }

    /// Incident `(neighbor, edge)` pairs sorted by neighbor id.
    pub fn incident(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v].iter().map(|&(w, _)| w)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.vertex_count()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Subgraph on `vertices` keeping only the listed host edges. Vertex `i`
    /// of the result is `vertices[i]`; names are inherited.
    pub fn subgraph(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Graph {
        let local: HashMap<VertexId, VertexId> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::with_names(vertices.iter().map(|&v| self.names[v].clone()).collect());
        for &e in edges {
            let (u, v) = self.edges[e];
            g.add_edge(local[&u], local[&v])
                .expect("subgraph edges come from a simple host");
        }
        g
    }

    /// Copy of the graph with the listed edges removed; surviving edges are
    /// renumbered in ascending order of their old ids.
    pub fn without_edges(&self, removed: &[EdgeId]) -> Graph {
        let keep: Vec<EdgeId> = self.edge_ids().filter(|e| !removed.contains(e)).collect();
        let all: Vec<VertexId> = self.vertices().collect();
        self.subgraph(&all, &keep)
    }

    /// Relabels vertex `v` as `perm[v]`, preserving edge order.
    pub fn permuted(&self, perm: &[VertexId]) -> Graph {
        let mut names = vec![String::new(); self.vertex_count()];
        for v in self.vertices() {
            names[perm[v]] = self.names[v].clone();
        }
        let mut g = Graph::with_names(names);
        for &(u, v) in &self.edges {
            g.add_edge(perm[u], perm[v]).expect("permutation keeps the graph simple");
        }
        g
    }
}
