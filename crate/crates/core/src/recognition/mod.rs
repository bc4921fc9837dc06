//! Recognition and inversion: decide whether a graph is the auxiliary graph
//! of some graph and rebuild a minimal preimage.

mod invert;
mod layout;
mod partitions;

pub use invert::{enumerate_preimages, invert, invert_prime, invert_with, InvertOptions, Inversion, Verdict};
pub use layout::{add_chords, layout_tree, ExplicitTree};
pub use partitions::{
    infer_params, label_cut_cliques, label_split, neighborhood_splits, recover_neighborhood_partitions,
    InferredParams, LabeledTreeEdge, NeighborhoodSplit, MAX_SPLITS,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// The maximal clique containing the triangle `seed`. It is unique exactly
/// when the common neighbours of the seed are pairwise adjacent.
pub fn extend_to_maximal_clique(h: &Graph, seed: [VertexId; 3]) -> Result<Vec<VertexId>> {
    let [a, b, c] = seed;
    if !(h.has_edge(a, b) && h.has_edge(b, c) && h.has_edge(a, c)) {
        return Err(Error::not_a_stag("seed is not a triangle"));
    }
    let common: Vec<VertexId> = h.neighbors(a).filter(|&w| h.has_edge(w, b) && h.has_edge(w, c)).collect();
    for (i, &u) in common.iter().enumerate() {
        if let Some(&v) = common[i + 1..].iter().find(|&&v| !h.has_edge(u, v)) {
            return Err(Error::not_a_stag(format!(
                "triangle extends through both {} and {}",
                h.name(u),
                h.name(v)
            )));
        }
    }
    let mut clique: Vec<VertexId> = seed.into_iter().chain(common).collect();
    clique.sort_unstable();
    Ok(clique)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::graph::{are_isomorphic, cartesian_product, families};
    use crate::stag::{build_stag, neighborhood_partitions};

    fn aux(g: &Graph) -> Graph {
        build_stag(g, 100_000).unwrap().into_graph()
    }

    fn sorted(mut classes: Vec<Vec<VertexId>>) -> Vec<Vec<VertexId>> {
        for c in &mut classes {
            c.sort_unstable();
        }
        classes.sort();
        classes
    }

    #[test]
    fn clique_extension() {
        assert_eq!(extend_to_maximal_clique(&families::complete(4), [0, 1, 2]).unwrap(), vec![0, 1, 2, 3]);
        assert_eq!(extend_to_maximal_clique(&families::complete(5), [1, 3, 4]).unwrap().len(), 5);
        assert_eq!(extend_to_maximal_clique(&families::diamond(), [0, 1, 2]).unwrap(), vec![0, 1, 2]);
        let mut k5e = families::complete(5);
        k5e = k5e.without_edges(&[k5e.edge_between(3, 4).unwrap()]);
        assert!(matches!(extend_to_maximal_clique(&k5e, [0, 1, 2]), Err(Error::NotAStag(_))));
        assert!(matches!(extend_to_maximal_clique(&families::cycle(4), [0, 1, 2]), Err(Error::NotAStag(_))));
    }

    #[test]
    fn partitions_match_ground_truth() {
        for g in [families::cycle(3), families::complete(4), families::theta(), families::diamond()] {
            let s = build_stag(&g, 1000).unwrap();
            for x in s.graph().vertices() {
                let truth = neighborhood_partitions(&s, x).unwrap();
                let cut = sorted(truth.cut_classes.into_iter().map(|(_, c)| c).collect());
                let cycle = sorted(truth.cycle_classes.into_iter().map(|(_, c)| c).collect());
                let splits = neighborhood_splits(s.graph(), x).unwrap();
                assert!(splits.iter().any(|sp| sp.cut == cut && sp.cycle == cycle), "{x}");
            }
        }
        let k3 = recover_neighborhood_partitions(&families::complete(3), 0).unwrap();
        assert_eq!(k3.cycle, vec![vec![1, 2]]);
        assert_eq!(k3.cut, vec![vec![1], vec![2]]);
        let k4 = recover_neighborhood_partitions(&aux(&families::complete(4)), 0).unwrap();
        assert_eq!((k4.cut.len(), k4.cycle.len()), (3, 3));
        assert!(matches!(recover_neighborhood_partitions(&families::cycle(6), 0), Err(Error::NotAStag(_))));
    }

    #[test]
    fn params() {
        let p = infer_params(&aux(&families::cycle(4))).unwrap();
        assert_eq!((p.n, p.m), (4, 4));
        let p = infer_params(&aux(&families::complete(4))).unwrap();
        assert_eq!((p.n, p.m), (4, 6));
        let p = infer_params(&families::complete(3)).unwrap();
        assert_eq!((p.n, p.m), (3, 3));
        // the prism and its planar dual share an auxiliary graph
        let p = infer_params(&aux(&families::prism())).unwrap();
        assert_eq!((p.n, p.m), (6, 9));
        assert_eq!(p.alternatives, vec![(5, 9)]);
    }

    #[test]
    fn labels() {
        let p = infer_params(&families::complete(3)).unwrap();
        let items = label_cut_cliques(&p, 0).unwrap();
        assert_eq!(items.len(), 2);
        assert!(items.iter().all(|i| i.label == BTreeSet::from([0])));

        let p = infer_params(&aux(&families::cycle(4))).unwrap();
        let items = label_cut_cliques(&p, 2).unwrap();
        assert_eq!(items.len(), 3);
        assert!(items.iter().all(|i| i.label == BTreeSet::from([0])));

        let h = aux(&families::theta());
        let p = infer_params(&h).unwrap();
        let items = label_cut_cliques(&p, 0).unwrap();
        assert_eq!(items.len(), 4);
        let ids: BTreeSet<usize> = items.iter().flat_map(|i| i.label.iter().copied()).collect();
        assert_eq!(ids.len(), 2);
    }

    #[test]
    fn incident_tree_edges_need_not_share_a_cycle() {
        // v=0 a=1 b=2 c=3; star tree at v with chords ac and cb
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (3, 2)]).unwrap();
        let s = build_stag(&g, 100).unwrap();
        let star = s.trees().unwrap().iter().position(|t| t.edges() == [0, 1, 2]).unwrap();
        let split = recover_neighborhood_partitions(s.graph(), star).unwrap();
        let items = label_split(&split).unwrap();
        let tree = layout_tree(&items, split.n()).unwrap();
        let disjoint = tree.edges.iter().enumerate().any(|(i, (a, b, x))| {
            tree.edges[i + 1..].iter().any(|(c, d, y)| {
                (a == c || a == d || b == c || b == d) && x.label.is_disjoint(&y.label)
            })
        });
        assert!(disjoint);
    }

    #[test]
    fn layouts_and_chords() {
        let one = |ids: &[usize]| ids.iter().copied().collect::<BTreeSet<usize>>();
        let items: Vec<LabeledTreeEdge> = (0..2).map(|i| LabeledTreeEdge { cut_clique_id: i, label: one(&[0]) }).collect();
        let t = layout_tree(&items, 3).unwrap();
        assert!(are_isomorphic(&add_chords(&t).unwrap(), &families::cycle(3), 16).unwrap());
        let items: Vec<LabeledTreeEdge> = (0..3).map(|i| LabeledTreeEdge { cut_clique_id: i, label: one(&[0]) }).collect();
        let t = layout_tree(&items, 4).unwrap();
        assert!(are_isomorphic(&add_chords(&t).unwrap(), &families::cycle(4), 16).unwrap());

        let h = aux(&families::complete(4));
        let p = infer_params(&h).unwrap();
        let t = layout_tree(&label_cut_cliques(&p, 0).unwrap(), 4).unwrap();
        for c in t.cycle_ids() {
            assert!(t.path_ends(c).is_some());
        }
        assert!(are_isomorphic(&add_chords(&t).unwrap(), &families::complete(4), 16).unwrap());

        // three edges pairwise on a common 2-edge cycle path, all on one 4-edge path
        let bad = vec![
            LabeledTreeEdge { cut_clique_id: 0, label: one(&[0, 1, 3]) },
            LabeledTreeEdge { cut_clique_id: 1, label: one(&[0, 1, 2]) },
            LabeledTreeEdge { cut_clique_id: 2, label: one(&[0, 2, 3]) },
            LabeledTreeEdge { cut_clique_id: 3, label: one(&[0]) },
        ];
        // without the long cycle a star satisfies the pairs
        let star: Vec<LabeledTreeEdge> = bad[..3]
            .iter()
            .map(|i| LabeledTreeEdge { cut_clique_id: i.cut_clique_id, label: i.label.iter().copied().filter(|&c| c != 0).collect() })
            .collect();
        assert!(layout_tree(&star, 4).is_ok());
        assert!(matches!(layout_tree(&bad, 5), Err(Error::NotAStag(_))));
    }

    #[test]
    fn prime_inversion() {
        assert!(are_isomorphic(&invert_prime(&families::complete(3)).unwrap(), &families::cycle(3), 16).unwrap());
        let g = invert_prime(&aux(&families::complete(4))).unwrap();
        assert!(are_isomorphic(&g, &families::complete(4), 16).unwrap());
        assert!(matches!(invert_prime(&families::petersen()), Err(Error::NotAStag(_))));
        assert!(matches!(invert_prime(&families::complete(2)), Err(Error::NotAStag(_))));
        assert_eq!(invert_prime(&Graph::new(1)).unwrap().vertex_count(), 1);
    }

    #[test]
    fn general_inversion() {
        let k3 = families::complete(3);
        let g = invert(&cartesian_product(&k3, &k3)).unwrap();
        assert!(are_isomorphic(&g, &families::bowtie(), 16).unwrap());
        assert_eq!(invert(&Graph::new(1)).unwrap().vertex_count(), 1);
        assert!(are_isomorphic(&invert(&families::complete(4)).unwrap(), &families::cycle(4), 16).unwrap());
        for h in [families::path(3), families::path(4), families::cycle(6), families::star(3), families::petersen(), families::cycle(4)] {
            assert!(matches!(invert(&h), Err(Error::NotAStag(_))));
        }
        for g in [families::theta(), families::diamond(), families::prism(), families::complete(5)] {
            let h = aux(&g);
            let back = invert(&h).unwrap();
            assert!(are_isomorphic(&aux(&back), &h, 5000).unwrap());
        }
    }

    #[test]
    fn preimages() {
        let out = enumerate_preimages(&families::cycle(3), 2).unwrap();
        assert_eq!(out.len(), 2);
        let base = aux(&families::cycle(3));
        for g in &out {
            assert_eq!(g.vertex_count(), 4);
            assert!(are_isomorphic(&aux(g), &base, 100).unwrap());
        }
        assert_eq!(enumerate_preimages(&families::bowtie(), 1).unwrap().len(), 1);
        assert_eq!(enumerate_preimages(&families::cycle(3), 7).unwrap()[6].vertex_count(), 6);
        assert!(matches!(enumerate_preimages(&families::triangle_pendant(), 1), Err(Error::NotMinimal(_))));
    }
}
