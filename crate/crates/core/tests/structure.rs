use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;
use stag_core::generate::{random_connected_sized, random_two_connected_sized, rng};
use stag_core::graph::{
    block_decomposition, common_cycle_classes, families, maximal_cliques, minimal_edge_cuts, simple_cycles,
    Graph,
};
use stag_core::spanning::{
    count_spanning_trees, enumerate_spanning_trees, fundamental_cycle, reverse_delete_tree, witness_edge_for_pair,
};
use stag_core::stag::{build_stag, ground_truth_cliques, neighborhood_partitions, CliqueTag};
use stag_core::Error;

fn cuts_remove_minimally(g: &Graph) {
    let count = |removed: &[usize]| {
        let h = g.without_edges(removed);
        stag_core::graph::components(&h).into_iter().max().unwrap() + 1
    };
    for cut in minimal_edge_cuts(g, 12).unwrap() {
        assert_eq!(count(&cut.edge_ids), 2);
        for skip in 0..cut.edge_ids.len() {
            let mut sub = cut.edge_ids.clone();
            sub.remove(skip);
            assert_eq!(count(&sub), 1);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blocks_partition_edges(seed in any::<u64>()) {
        let g = random_connected_sized(1, 10, &mut rng(seed));
        let dec = block_decomposition(&g).unwrap();
        let mut seen = vec![0; g.edge_count()];
        for b in &dec.blocks {
            for &e in &b.edges {
                seen[e] += 1;
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        for (i, a) in dec.blocks.iter().enumerate() {
            for b in &dec.blocks[i + 1..] {
                prop_assert!(a.vertices.iter().filter(|v| b.vertices.contains(v)).count() <= 1);
            }
        }
    }

    #[test]
    fn cycle_classes_are_blocks(seed in any::<u64>()) {
        let g = random_connected_sized(3, 10, &mut rng(seed));
        let dec = block_decomposition(&g).unwrap();
        match common_cycle_classes(&g) {
            Ok(classes) => {
                let blocks: BTreeSet<Vec<usize>> = dec.blocks.iter().map(|b| {
                    let mut e = b.edges.clone();
                    e.sort_unstable();
                    e
                }).collect();
                prop_assert_eq!(classes.into_iter().collect::<BTreeSet<_>>(), blocks);
            }
            Err(Error::HasBridge(e)) => prop_assert!(!dec.bridges().is_empty() && dec.bridges().contains(&e)),
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn every_edge_pair_shares_a_cycle(seed in any::<u64>()) {
        let g = random_two_connected_sized(3, 8, &mut rng(seed));
        let cycles = simple_cycles(&g, 12).unwrap();
        for e1 in g.edge_ids() {
            for e2 in e1 + 1..g.edge_count() {
                prop_assert!(cycles.iter().any(|c| c.contains(&e1) && c.contains(&e2)));
            }
        }
    }

    #[test]
    fn minimal_cuts_disconnect_minimally(seed in any::<u64>()) {
        let g = random_connected_sized(2, 8, &mut rng(seed));
        cuts_remove_minimally(&g);
    }

    /// The existential form of the two-edge witness theorem: reverse-delete
    /// with the pair protected always ends at a tree with a witness.
    #[test]
    fn protected_reverse_delete_yields_witness(seed in any::<u64>()) {
        let g = random_two_connected_sized(3, 7, &mut rng(seed));
        for e1 in g.edge_ids() {
            for e2 in e1 + 1..g.edge_count() {
                let run = reverse_delete_tree(&g, Some((e1, e2))).unwrap();
                let last = *run.trace.last().unwrap();
                let cycle = fundamental_cycle(&g, &run.tree, last).unwrap();
                prop_assert!(cycle.contains(&e1) && cycle.contains(&e2));
                if run.tree.contains(e1) && run.tree.contains(e2) {
                    prop_assert!(witness_edge_for_pair(&g, &run.tree, e1, e2).is_ok());
                }
            }
        }
    }

    /// Every NoWitness the scan reports is genuine: no fundamental cycle of
    /// that tree holds both edges.
    #[test]
    fn witness_failures_are_genuine(seed in any::<u64>()) {
        let g = random_two_connected_sized(3, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(400u32));
        for t in enumerate_spanning_trees(&g, 400).unwrap() {
            for (i, &e1) in t.edges().iter().enumerate() {
                for &e2 in &t.edges()[i + 1..] {
                    match witness_edge_for_pair(&g, &t, e1, e2) {
                        Ok(e) => {
                            let c = fundamental_cycle(&g, &t, e).unwrap();
                            prop_assert!(c.contains(&e1) && c.contains(&e2));
                        }
                        Err(Error::NoWitness(..)) => {
                            for e in t.non_tree_edges(&g) {
                                let c = fundamental_cycle(&g, &t, e).unwrap();
                                prop_assert!(!(c.contains(&e1) && c.contains(&e2)));
                            }
                        }
                        Err(e) => prop_assert!(false, "{e}"),
                    }
                }
            }
        }
    }
}

#[test]
fn witness_fails_for_some_tree() {
    // v=0 a=1 b=2 c=3 with the star tree at v
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 3), (3, 2)]).unwrap();
    let t = stag_core::spanning::SpanningTree::new(&g, vec![0, 1, 2]).unwrap();
    assert_eq!(witness_edge_for_pair(&g, &t, 0, 1), Err(Error::NoWitness(0, 1)));
    assert!(witness_edge_for_pair(&g, &t, 0, 2).is_ok());
}

fn clique_classification(g: &Graph) {
    let s = build_stag(g, 100_000).unwrap();
    let truth = ground_truth_cliques(&s).unwrap();
    let maximal: BTreeSet<Vec<usize>> = maximal_cliques(s.graph()).into_iter().filter(|c| c.len() >= 3).collect();
    for c in &maximal {
        let tags: BTreeSet<CliqueTag> = truth.iter().filter(|t| &t.members == c).map(|t| t.tag).collect();
        assert_eq!(tags.len(), 1, "{c:?} tags {tags:?}");
    }
    for t in truth.iter().filter(|t| t.size() >= 3) {
        assert!(maximal.contains(&t.members), "{:?} not maximal", t.members);
    }

    // triangle dichotomy
    let n = g.vertex_count();
    let trees = s.trees().unwrap();
    let h = s.graph();
    for a in h.vertices() {
        for b in h.neighbors(a).filter(|&b| b > a) {
            for c in h.neighbors(b).filter(|&c| c > b && h.has_edge(a, c)) {
                let common = trees[a]
                    .edges()
                    .iter()
                    .filter(|&&e| trees[b].contains(e) && trees[c].contains(e))
                    .count();
                assert!(common + 3 == n || common + 2 == n);
                let tag = truth
                    .iter()
                    .find(|t| t.members.contains(&a) && t.members.contains(&b) && t.members.contains(&c))
                    .unwrap()
                    .tag;
                assert_eq!(tag == CliqueTag::Cycle, common + 3 == n);
            }
        }
    }

    // class counts at every vertex
    if g.vertex_count() > 1 {
        let m = g.edge_count();
        for v in h.vertices() {
            let p = neighborhood_partitions(&s, v).unwrap();
            assert_eq!(p.cut_classes.len(), n - 1);
            assert_eq!(p.cycle_classes.len(), m + 1 - n);
        }
    }
}

#[test]
fn cliques_on_fixtures() {
    for (_, g) in families::fixtures() {
        clique_classification(&g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cliques_on_random_graphs(seed in any::<u64>()) {
        let g = random_connected_sized(2, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(600u32));
        clique_classification(&g);
    }
}
