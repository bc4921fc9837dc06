use std::collections::BTreeSet;

use super::{is_connected, EdgeId, Graph, VertexId};
use crate::error::{Error, Result};

/// A maximal 2-connected subgraph, in host vertex and edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Block {
    /// Materializes the block as a standalone graph. Vertex `i` of the result
    /// is `self.vertices[i]` in the host and keeps its name.
    pub fn to_graph(&self, host: &Graph) -> Graph {
        host.subgraph(&self.vertices, &self.edges)
    }

    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<VertexId>,
    /// Block-cutpoint tree as `(block index, cut vertex)` incidences.
    pub block_cut_tree: Vec<(usize, VertexId)>,
}

impl BlockDecomposition {
    /// Host edge ids of the bridges, i.e. of the `K2` blocks.
    pub fn bridges(&self) -> Vec<EdgeId> {
        self.blocks
            .iter()
            .filter(|b| b.is_bridge())
            .map(|b| b.edges[0])
            .collect()
    }
}

/// Blocks and cut vertices by the iterative Hopcroft-Tarjan DFS. Blocks are
/// emitted with sorted vertex and edge lists, ordered by smallest edge id.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0;
    let mut edge_stack: Vec<EdgeId> = Vec::new();
    let mut blocks = Vec::new();
    let mut is_cut = vec![false; n];

    // Frame: (vertex, edge used to reach it, next incidence index, child count)
    let mut stack: Vec<(VertexId, Option<EdgeId>, usize, usize)> = Vec::new();
    disc[0] = time;
    low[0] = time;
    time += 1;
    stack.push((0, None, 0, 0));

    while let Some(frame) = stack.last_mut() {
        let (v, parent_edge, next, _) = *frame;
        if next < g.incident(v).len() {
            frame.2 += 1;
            let (w, e) = g.incident(v)[next];
            if Some(e) == parent_edge {
                continue;
            }
            if disc[w] == usize::MAX {
                frame.3 += 1;
                edge_stack.push(e);
                disc[w] = time;
                low[w] = time;
                time += 1;
                stack.push((w, Some(e), 0, 0));
            } else if disc[w] < disc[v] {
                edge_stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
            continue;
        }
        let (v, parent_edge, _, children) = stack.pop().unwrap();
        let Some(pe) = parent_edge else {
            if children > 1 {
                is_cut[v] = true;
            }
            continue;
        };
        let u = stack.last().unwrap().0;
        low[u] = low[u].min(low[v]);
        if low[v] >= disc[u] {
            if stack.len() > 1 {
                is_cut[u] = true;
            }
            let mut edges = Vec::new();
            while let Some(e) = edge_stack.pop() {
                edges.push(e);
                if e == pe {
                    break;
                }
            }
            let mut verts = BTreeSet::new();
            for &e in &edges {
                let (a, b) = g.endpoints(e);
                verts.insert(a);
                verts.insert(b);
            }
            edges.sort_unstable();
            blocks.push(Block {
                vertices: verts.into_iter().collect(),
                edges,
            });
        }
    }
    if n == 1 {
        blocks.push(Block {
            vertices: vec![0],
            edges: Vec::new(),
        });
    }
    blocks.sort_by_key(|b| b.edges.first().copied());

    let cut_vertices: Vec<VertexId> = (0..n).filter(|&v| is_cut[v]).collect();
    let mut block_cut_tree = Vec::new();
    for (i, b) in blocks.iter().enumerate() {
        for &v in &b.vertices {
            if is_cut[v] {
                block_cut_tree.push((i, v));
            }
        }
    }
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
        block_cut_tree,
    })
}

/// Connected and either `K2` or at least three vertices with no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.vertex_count();
    if !is_connected(g) || n < 2 {
        return false;
    }
    if n == 2 {
        return g.edge_count() == 1;
    }
    block_decomposition(g).is_ok_and(|d| d.cut_vertices.is_empty())
}
