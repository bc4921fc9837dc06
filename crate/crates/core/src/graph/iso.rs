//! Isomorphism testing by colour refinement plus individualization and
//! backtracking. Both graphs are refined jointly so colour ids are comparable
//! across them. No canonical labelling is produced.

use super::{Graph, VertexId};
use crate::error::{Error, Result};

/// Default vertex bound for [`are_isomorphic`] and [`find_isomorphism`].
pub const DEFAULT_ISO_LIMIT: usize = 5000;

struct Joint<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
    n: usize,
    nbrs: Vec<Vec<usize>>,
}

impl Joint<'_> {
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let total = colors.len();
        let mut count = distinct(&colors);
        loop {
            let mut sigs: Vec<(u32, Vec<u32>, usize)> = (0..total)
                .map(|v| {
                    let mut s: Vec<u32> = self.nbrs[v].iter().map(|&w| colors[w]).collect();
                    s.sort_unstable();
                    (colors[v], s, v)
                })
                .collect();
            sigs.sort_unstable();
            let mut next = vec![0u32; total];
            let mut c = 0u32;
            for i in 0..total {
                if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                    c += 1;
                }
                next[sigs[i].2] = c;
            }
            colors = next;
            let new_count = c as usize + 1;
            if new_count == count {
                return colors;
            }
            count = new_count;
        }
    }

    fn balanced(&self, colors: &[u32]) -> bool {
        let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
        let mut tally = vec![0i64; k];
        for v in 0..self.n {
            tally[colors[v] as usize] += 1;
            tally[colors[v + self.n] as usize] -= 1;
        }
        tally.iter().all(|&t| t == 0)
    }

    fn search(&self, colors: Vec<u32>) -> Option<Vec<VertexId>> {
        let colors = self.refine(colors);
        if !self.balanced(&colors) {
            return None;
        }
        let k = colors.iter().max().map_or(0, |&c| c as usize + 1);
        let mut size = vec![0usize; k];
        for &c in &colors[..self.n] {
            size[c as usize] += 1;
        }
        let target = (0..k).filter(|&c| size[c] > 1).min_by_key(|&c| (size[c], c));
        let Some(cell) = target else {
            let mut by_color = vec![0; k];
            for w in 0..self.n {
                by_color[colors[w + self.n] as usize] = w;
            }
            let map: Vec<VertexId> = (0..self.n).map(|v| by_color[colors[v] as usize]).collect();
            return self.verify(&map).then_some(map);
        };
        let v = (0..self.n).find(|&v| colors[v] as usize == cell).unwrap();
        for w in (0..self.n).filter(|&w| colors[w + self.n] as usize == cell) {
            let mut next = colors.clone();
            next[v] = k as u32;
            next[w + self.n] = k as u32;
            if let Some(map) = self.search(next) {
                return Some(map);
            }
        }
        None
    }

    fn verify(&self, map: &[VertexId]) -> bool {
        self.g1.edges().iter().all(|&(u, v)| self.g2.has_edge(map[u], map[v]))
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Returns a bijection `map` with `uv` an edge of `g1` iff `map[u] map[v]` is
/// an edge of `g2`, or `None` when the graphs are not isomorphic.
pub fn find_isomorphism(g1: &Graph, g2: &Graph, limit: usize) -> Result<Option<Vec<VertexId>>> {
    let n = g1.vertex_count();
    if n.max(g2.vertex_count()) > limit {
        return Err(Error::TooLarge {
            what: "isomorphism input vertex count",
            size: n.max(g2.vertex_count()),
            limit,
        });
    }
    if n != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(None);
    }
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    let mut nbrs: Vec<Vec<usize>> = g1.vertices().map(|v| g1.neighbors(v).collect()).collect();
    nbrs.extend(g2.vertices().map(|v| g2.neighbors(v).map(|w| w + n).collect()));
    let joint = Joint { g1, g2, n, nbrs };
    let colors: Vec<u32> = (0..2 * n).map(|v| joint.nbrs[v].len() as u32).collect();
    Ok(joint.search(colors))
}

pub fn are_isomorphic(g1: &Graph, g2: &Graph, limit: usize) -> Result<bool> {
    Ok(find_isomorphism(g1, g2, limit)?.is_some())
}
