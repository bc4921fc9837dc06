//! Cartesian-product prime factorization.
//!
//! Edges are first merged into classes that certainly belong to one factor:
//! two incident edges on a triangle, two incident edges that span no square,
//! more than one square, or a square with a diagonal, and the opposite edges
//! of every square. The resulting classes refine the prime factor classes.
//! Prime classes are then the smallest unions `S` of those classes for which
//! `{S, rest}` splits the graph as a product, tested exactly by layer
//! coordinates.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    block_decomposition, cartesian_product_all, components, is_connected, EdgeId, Graph, VertexId,
};
use crate::spanning::SpanningTree;
use crate::stag::{build_stag, StagGraph};

/// Default vertex bound for [`prime_factorize`].
pub const DEFAULT_FACTOR_LIMIT: usize = 4096;

/// Largest number of refined edge classes the subset search will combine.
const MAX_CLASSES: usize = 20;

#[derive(Clone, Debug)]
pub struct Factorization {
    /// Prime factors, largest first; never `K1`.
    pub factors: Vec<Graph>,
    /// `coordinates[v][i]` is the vertex of `factors[i]` that `v` projects to.
    pub coordinates: Vec<Vec<VertexId>>,
}

#[derive(Serialize)]
struct CoordinateRecord<'a> {
    vertex: &'a str,
    coordinates: &'a [VertexId],
}

impl Factorization {
    pub fn is_prime(&self) -> bool {
        self.factors.len() <= 1
    }

    /// Coordinates sidecar: `[{"vertex": name, "coordinates": [..]}, ..]`.
    pub fn coordinates_json(&self, g: &Graph) -> String {
        let records: Vec<CoordinateRecord> = g
            .vertices()
            .map(|v| CoordinateRecord {
                vertex: g.name(v),
                coordinates: &self.coordinates[v],
            })
            .collect();
        serde_json::to_string_pretty(&records).expect("coordinates serialize") + "\n"
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
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

fn sorted_intersection(a: &[(VertexId, EdgeId)], b: &[(VertexId, EdgeId)], skip: VertexId) -> Vec<VertexId> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if a[i].0 != skip {
                    out.push(a[i].0);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Edge classes that each lie inside a single prime factor.
fn refined_classes(g: &Graph) -> Vec<usize> {
    let mut uf = UnionFind((0..g.edge_count()).collect());
    for v in g.vertices() {
        let inc = g.incident(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                let (a, ea) = inc[i];
                let (b, eb) = inc[j];
                let far = sorted_intersection(g.incident(a), g.incident(b), v);
                for &w in &far {
                    uf.union(ea, g.edge_between(w, b).unwrap());
                    uf.union(eb, g.edge_between(w, a).unwrap());
                }
                let unique_chordless = far.len() == 1 && !g.has_edge(v, far[0]) && !g.has_edge(a, b);
                if !unique_chordless {
                    uf.union(ea, eb);
                }
            }
        }
    }
    let mut label = vec![usize::MAX; g.edge_count()];
    let mut next = 0;
    let mut out = vec![0; g.edge_count()];
    for e in g.edge_ids() {
        let r = uf.find(e);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
        out[e] = label[r];
    }
    out
}

/// Layer labels for the spanning subgraph on edges with `keep(e)`.
fn layers(g: &Graph, keep: impl Fn(EdgeId) -> bool) -> Vec<usize> {
    let kept: Vec<EdgeId> = g.edge_ids().filter(|&e| keep(e)).collect();
    let all: Vec<VertexId> = g.vertices().collect();
    components(&g.subgraph(&all, &kept))
}

/// Whether the edge bipartition `in_s` is a product relation, i.e. `g` is
/// the product of the graph of `S`-layers and the graph of the other layers.
fn splits_as_product(g: &Graph, in_s: &[bool]) -> bool {
    let s_count = in_s.iter().filter(|&&x| x).count();
    if s_count == 0 || s_count == g.edge_count() {
        return false;
    }
    let s_layer = layers(g, |e| in_s[e]);
    let r_layer = layers(g, |e| !in_s[e]);
    let a = s_layer.iter().max().unwrap() + 1;
    let b = r_layer.iter().max().unwrap() + 1;
    if a * b != g.vertex_count() {
        return false;
    }
    let mut seen = vec![false; a * b];
    for v in g.vertices() {
        let cell = s_layer[v] * b + r_layer[v];
        if seen[cell] {
            return false;
        }
        seen[cell] = true;
    }
    // Factor along S has the R-layers as vertices; along R, the S-layers.
    let mut s_edges = std::collections::HashSet::new();
    let mut r_edges = std::collections::HashSet::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if in_s[e] {
            let k = (r_layer[u].min(r_layer[v]), r_layer[u].max(r_layer[v]));
            s_edges.insert(k);
        } else {
            let k = (s_layer[u].min(s_layer[v]), s_layer[u].max(s_layer[v]));
            r_edges.insert(k);
        }
    }
    g.edge_count() == s_edges.len() * a + r_edges.len() * b
}

fn guard(g: &Graph, limit: usize) -> Result<()> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.vertex_count() > limit {
        return Err(Error::TooLarge {
            what: "factorization input vertex count",
            size: g.vertex_count(),
            limit,
        });
    }
    Ok(())
}

/// Prime factorization of a connected graph, verified by rebuilding the
/// product and checking that the coordinate map is an isomorphism.
pub fn prime_factorize(g: &Graph, limit: usize) -> Result<Factorization> {
    guard(g, limit)?;
    if g.vertex_count() == 1 {
        return Ok(Factorization {
            factors: Vec::new(),
            coordinates: vec![Vec::new()],
        });
    }
    let class = refined_classes(g);
    let k = class.iter().max().unwrap() + 1;
    let groups: Vec<Vec<usize>> = if k == 1 {
        vec![vec![0]]
    } else {
        if k > MAX_CLASSES {
            return Err(Error::TooLarge {
                what: "refined edge class count",
                size: k,
                limit: MAX_CLASSES,
            });
        }
        prime_groups(g, &class, k)
    };

    let base = 0;
    let mut factors = Vec::new();
    let mut coords: Vec<Vec<VertexId>> = vec![Vec::new(); g.vertex_count()];
    for group in &groups {
        let in_s: Vec<bool> = class.iter().map(|c| group.contains(c)).collect();
        let s_layer = layers(g, |e| in_s[e]);
        let r_layer = layers(g, |e| !in_s[e]);
        let fiber: Vec<VertexId> = g.vertices().filter(|&v| s_layer[v] == s_layer[base]).collect();
        let fiber_edges: Vec<EdgeId> = g
            .edge_ids()
            .filter(|&e| in_s[e] && s_layer[g.endpoints(e).0] == s_layer[base])
            .collect();
        let factor = g.subgraph(&fiber, &fiber_edges);
        let by_r: HashMap<usize, VertexId> = fiber.iter().enumerate().map(|(i, &v)| (r_layer[v], i)).collect();
        for v in g.vertices() {
            coords[v].push(by_r[&r_layer[v]]);
        }
        factors.push(factor);
    }

    let mut order: Vec<usize> = (0..factors.len()).collect();
    order.sort_by(|&i, &j| {
        let key = |f: &Graph| (std::cmp::Reverse(f.vertex_count()), std::cmp::Reverse(f.edge_count()), f.degree_sequence());
        key(&factors[i]).cmp(&key(&factors[j])).then(i.cmp(&j))
    });
    let factors: Vec<Graph> = order.iter().map(|&i| factors[i].clone()).collect();
    let coordinates: Vec<Vec<VertexId>> = coords
        .into_iter()
        .map(|c| order.iter().map(|&i| c[i]).collect())
        .collect();
    let result = Factorization { factors, coordinates };
    validate(g, &result)?;
    Ok(result)
}

/// Smallest unions of refined classes that split off as a product factor.
fn prime_groups(g: &Graph, class: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; k];
    let mut groups = Vec::new();
    let mut subsets: Vec<u32> = (1u32..(1 << k) - 1).collect();
    subsets.sort_by_key(|m| (m.count_ones(), *m));
    for mask in subsets {
        if assigned.iter().all(|&a| a) {
            break;
        }
        if (0..k).any(|c| mask >> c & 1 == 1 && assigned[c]) {
            continue;
        }
        let in_s: Vec<bool> = class.iter().map(|&c| mask >> c & 1 == 1).collect();
        if splits_as_product(g, &in_s) {
            let group: Vec<usize> = (0..k).filter(|&c| mask >> c & 1 == 1).collect();
            for &c in &group {
                assigned[c] = true;
            }
            groups.push(group);
        }
    }
    let rest: Vec<usize> = (0..k).filter(|&c| !assigned[c]).collect();
    if !rest.is_empty() {
        groups.push(rest);
    }
    groups
}

fn validate(g: &Graph, f: &Factorization) -> Result<()> {
    let product = cartesian_product_all(&f.factors);
    if product.vertex_count() != g.vertex_count() || product.edge_count() != g.edge_count() {
        return Err(Error::ValidationFailed("product size differs from input".into()));
    }
    let index = |c: &[VertexId]| {
        c.iter()
            .zip(&f.factors)
            .fold(0, |acc, (&x, fac)| acc * fac.vertex_count() + x)
    };
    let map: Vec<VertexId> = g.vertices().map(|v| index(&f.coordinates[v])).collect();
    let mut hit = vec![false; g.vertex_count()];
    for &m in &map {
        if hit[m] {
            return Err(Error::ValidationFailed("coordinates are not a bijection".into()));
        }
        hit[m] = true;
    }
    if g.edges().iter().any(|&(u, v)| !product.has_edge(map[u], map[v])) {
        return Err(Error::ValidationFailed("coordinate map is not an isomorphism".into()));
    }
    if f.factors.iter().any(|x| x.vertex_count() < 2) {
        return Err(Error::ValidationFailed("trivial factor".into()));
    }
    Ok(())
}

/// `K1` counts as prime.
pub fn is_prime(g: &Graph, limit: usize) -> Result<bool> {
    Ok(prime_factorize(g, limit)?.is_prime())
}

/// The product of the auxiliary graphs of the blocks of `g`, unannotated.
pub fn product_of_block_stags(g: &Graph, max_trees: usize) -> Result<StagGraph> {
    let dec = block_decomposition(g)?;
    let mut auxes = Vec::new();
    for b in &dec.blocks {
        let aux = build_stag(&b.to_graph(g), max_trees)?;
        if aux.vertex_count() > 1 {
            auxes.push(aux.into_graph());
        }
    }
    Ok(StagGraph::unannotated(cartesian_product_all(&auxes)))
}

/// Projection of a spanning tree of `g` onto each block, in block order.
pub fn tree_per_block(g: &Graph, t: &SpanningTree) -> Result<Vec<Vec<EdgeId>>> {
    let dec = block_decomposition(g)?;
    Ok(dec
        .blocks
        .iter()
        .map(|b| b.edges.iter().copied().filter(|&e| t.contains(e)).collect())
        .collect())
}
