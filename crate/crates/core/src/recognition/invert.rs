use serde::Serialize;

use super::layout::{add_chords, layout_tree};
use super::partitions::{infer_params, label_split, neighborhood_splits};
use crate::error::{Error, Result};
use crate::factor::{prime_factorize, DEFAULT_FACTOR_LIMIT};
use crate::graph::{
    are_isomorphic, block_decomposition, families, is_connected, Graph, VertexId, DEFAULT_ISO_LIMIT,
};
use crate::spanning::count_spanning_trees;
use crate::stag::build_stag;

#[derive(Clone, Copy, Debug)]
pub struct InvertOptions {
    pub factor_limit: usize,
    pub iso_limit: usize,
}

impl Default for InvertOptions {
    fn default() -> Self {
        InvertOptions {
            factor_limit: DEFAULT_FACTOR_LIMIT,
            iso_limit: DEFAULT_ISO_LIMIT,
        }
    }
}

/// A verified minimal preimage and the sizes of the prime factors it came from.
#[derive(Clone, Debug)]
pub struct Inversion {
    pub graph: Graph,
    pub factor_sizes: Vec<usize>,
}

/// Machine-readable outcome of an inversion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub is_stag: bool,
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub factors: Vec<usize>,
    pub verification: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verdict {
    pub fn from_result(result: &Result<Inversion>) -> Verdict {
        match result {
            Ok(inv) => Verdict {
                is_stag: true,
                n: Some(inv.graph.vertex_count()),
                m: Some(inv.graph.edge_count()),
                factors: inv.factor_sizes.clone(),
                verification: "iso",
                reason: None,
            },
            Err(e) => Verdict {
                is_stag: false,
                n: None,
                m: None,
                factors: Vec::new(),
                verification: "failed",
                reason: Some(e.to_string()),
            },
        }
    }
}

fn matches(h: &Graph, g: &Graph, opts: &InvertOptions) -> Result<bool> {
    if count_spanning_trees(g) != h.vertex_count().into() {
        return Ok(false);
    }
    let aux = build_stag(g, h.vertex_count())?;
    are_isomorphic(aux.graph(), h, opts.iso_limit)
}

/// A 2-connected graph (or `K1`) whose auxiliary graph is isomorphic to `h`.
pub fn invert_prime(h: &Graph) -> Result<Graph> {
    invert_prime_with(h, &InvertOptions::default())
}

fn invert_prime_with(h: &Graph, opts: &InvertOptions) -> Result<Graph> {
    if !is_connected(h) {
        return Err(Error::Disconnected);
    }
    let k = h.vertex_count();
    if k == 1 {
        return Ok(Graph::new(1));
    }
    if h.is_complete() {
        return if k >= 3 {
            Ok(families::cycle(k))
        } else {
            Err(Error::not_a_stag("K2 is the auxiliary graph of no simple graph"))
        };
    }
    let params = infer_params(h)?;
    let anchor = h
        .vertices()
        .min_by_key(|&v| (h.degree(v), h.neighbors(v).collect::<Vec<VertexId>>(), v))
        .unwrap();
    let wanted: Vec<(usize, usize)> = std::iter::once((params.n, params.m))
        .chain(params.alternatives.iter().copied())
        .collect();
    let mut last = Error::not_a_stag("no reconstruction matches");
    for split in neighborhood_splits(h, anchor)? {
        if !wanted.contains(&(split.n(), split.m())) {
            continue;
        }
        let attempt = label_split(&split)
            .and_then(|items| layout_tree(&items, split.n()))
            .and_then(|t| add_chords(&t));
        match attempt {
            Ok(g) if matches(h, &g, opts)? => return Ok(g),
            Ok(_) => last = Error::not_a_stag("reconstruction's auxiliary graph differs from the input"),
            Err(e) => last = e,
        }
    }
    Err(last)
}

/// A minimal preimage of `h`: the inverted prime factors glued at one shared
/// vertex (each block's lowest id), verified by rebuilding its auxiliary graph.
pub fn invert(h: &Graph) -> Result<Graph> {
    invert_with(h, &InvertOptions::default()).map(|inv| inv.graph)
}

pub fn invert_with(h: &Graph, opts: &InvertOptions) -> Result<Inversion> {
    let fact = prime_factorize(h, opts.factor_limit)?;
    let mut g = Graph::new(1);
    for factor in &fact.factors {
        let block = invert_prime_with(factor, opts)?;
        let offset = g.vertex_count() - 1;
        let ids: Vec<VertexId> = block
            .vertices()
            .map(|v| if v == 0 { 0 } else { g.add_vertex((offset + v).to_string()) })
            .collect();
        for &(u, v) in block.edges() {
            g.add_edge(ids[u], ids[v]).expect("blocks share only vertex 0");
        }
    }
    if !matches(h, &g, opts)? {
        return Err(Error::not_a_stag("assembled graph's auxiliary graph differs from the input"));
    }
    Ok(Inversion {
        graph: g,
        factor_sizes: fact.factors.iter().map(Graph::vertex_count).collect(),
    })
}

/// Non-minimal preimages with the same auxiliary graph: `g_min` with a
/// pendant edge at each vertex in turn, then pendant paths of length 2, 3, ...
pub fn enumerate_preimages(g_min: &Graph, budget: usize) -> Result<Vec<Graph>> {
    let dec = block_decomposition(g_min)?;
    if let Some(&bridge) = dec.bridges().first() {
        return Err(Error::NotMinimal(bridge));
    }
    let mut out = Vec::with_capacity(budget);
    let mut len = 1;
    while out.len() < budget {
        for v in g_min.vertices() {
            if out.len() == budget {
                break;
            }
            let mut g = g_min.clone();
            let mut prev = v;
            for _ in 0..len {
                let w = g.add_vertex(fresh_name(&g));
                g.add_edge(prev, w).unwrap();
                prev = w;
            }
            out.push(g);
        }
        len += 1;
    }
    Ok(out)
}

fn fresh_name(g: &Graph) -> String {
    let mut i = g.vertex_count();
    loop {
        let name = format!("p{i}");
        if !g.names().contains(&name) {
            return name;
        }
        i += 1;
    }
}
