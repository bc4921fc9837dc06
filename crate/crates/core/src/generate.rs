//! Seeded random graph generators.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn max_edges(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn add_random_chords(g: &mut Graph, count: usize, rng: &mut ChaCha8Rng) {
    let n = g.vertex_count();
    let mut free: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    free.shuffle(rng);
    for &(u, v) in free.iter().take(count) {
        g.add_edge(u, v).unwrap();
    }
}

/// A connected graph with exactly `n` vertices and `m` edges: a random
/// recursive tree plus random extra edges.
pub fn random_connected(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n == 0 || m + 1 < n || m > max_edges(n) {
        return Err(Error::TooLarge {
            what: "requested edge count",
            size: m,
            limit: max_edges(n),
        });
    }
    let mut g = Graph::new(n);
    let mut order: Vec<usize> = (0..n).collect();
    order[1..].shuffle(rng);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.add_edge(parent, order[i]).unwrap();
    }
    add_random_chords(&mut g, m + 1 - n, rng);
    Ok(g)
}

/// A 2-connected graph with exactly `n` vertices and `m` edges, built from a
/// cycle by ear additions: ears with internal vertices until `n` is reached,
/// then single-edge ears (chords).
pub fn random_two_connected(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 3 || m < n || m > max_edges(n) {
        return Err(Error::TooLarge {
            what: "requested edge count",
            size: m,
            limit: max_edges(n),
        });
    }
    // each ear adds one more edge than it has internal vertices; chords
    // make up whatever the ears leave
    let extra = m - n;
    // with no spare edges the base cycle must already be spanning
    let base = if extra == 0 { n } else { rng.gen_range(3..=n) };
    let mut g = Graph::new(n);
    for i in 0..base {
        g.add_edge(i, (i + 1) % base).unwrap();
    }
    let mut placed = base;
    let mut ears_left = extra;
    while placed < n {
        let remaining = n - placed;
        // keep at least one vertex per remaining ear
        let max_len = remaining.saturating_sub(ears_left - 1).max(1);
        let len = if ears_left == 1 { remaining } else { rng.gen_range(1..=max_len) };
        let a = rng.gen_range(0..placed);
        let mut b = rng.gen_range(0..placed - 1);
        if b >= a {
            b += 1;
        }
        let mut prev = a;
        for k in 0..len {
            g.add_edge(prev, placed + k).unwrap();
            prev = placed + k;
        }
        g.add_edge(prev, b).unwrap();
        placed += len;
        ears_left -= 1;
    }
    let have = g.edge_count();
    add_random_chords(&mut g, m - have, rng);
    Ok(g)
}

/// Random `(n, m)` for [`random_two_connected`] with `n` in `lo..=hi`.
pub fn random_two_connected_sized(lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(lo.max(3)..=hi);
    let m = rng.gen_range(n..=max_edges(n));
    random_two_connected(n, m, rng).expect("size drawn in range")
}

/// Random connected graph with `n` in `lo..=hi` and a random edge count.
pub fn random_connected_sized(lo: usize, hi: usize, rng: &mut ChaCha8Rng) -> Graph {
    let n = rng.gen_range(lo.max(1)..=hi);
    let m = rng.gen_range(n - 1..=max_edges(n));
    random_connected(n, m, rng).expect("size drawn in range")
}

/// Glues random 2-connected blocks and bridges at random cut vertices until
/// the graph has `n` vertices.
pub fn random_multi_block(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::new(1);
    while g.vertex_count() < n {
        let room = n - g.vertex_count();
        let at = rng.gen_range(0..g.vertex_count());
        let block = if room >= 2 && rng.gen_bool(0.75) {
            let k = rng.gen_range(3..=(room + 1).min(5));
            let e = rng.gen_range(k..=max_edges(k).min(k + 2));
            random_two_connected(k, e, rng).unwrap()
        } else {
            Graph::from_edges(2, &[(0, 1)]).unwrap()
        };
        let offset = g.vertex_count();
        let ids: Vec<usize> = block
            .vertices()
            .map(|v| {
                if v == 0 {
                    at
                } else {
                    g.add_vertex((offset + v - 1).to_string())
                }
            })
            .collect();
        for &(u, v) in block.edges() {
            g.add_edge(ids[u], ids[v]).unwrap();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_connected, is_two_connected};

    #[test]
    fn exact_sizes() {
        let mut r = rng(7);
        for n in 3..=8 {
            for m in n..=max_edges(n) {
                let g = random_two_connected(n, m, &mut r).unwrap();
                assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
                assert!(is_two_connected(&g));
            }
            for m in n - 1..=max_edges(n) {
                let g = random_connected(n, m, &mut r).unwrap();
                assert_eq!((g.vertex_count(), g.edge_count()), (n, m));
                assert!(is_connected(&g));
            }
        }
        assert!(random_two_connected(4, 3, &mut r).is_err());
        assert!(random_connected(4, 7, &mut r).is_err());
    }

    #[test]
    fn seeded() {
        let a = random_multi_block(8, &mut rng(3));
        let b = random_multi_block(8, &mut rng(3));
        assert_eq!(a, b);
        assert_eq!(a.vertex_count(), 8);
        assert!(is_connected(&a));
    }
}
