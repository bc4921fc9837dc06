use num_bigint::BigUint;
use proptest::prelude::*;
use stag_core::generate::{random_connected_sized, random_two_connected_sized, rng};
use stag_core::graph::{are_isomorphic, block_decomposition, families, Graph};
use stag_core::oracles::brute_force_is_stag;
use stag_core::recognition::{
    infer_params, invert, label_split, layout_tree, neighborhood_splits, NeighborhoodSplit,
};
use stag_core::spanning::{count_spanning_trees, fundamental_cycle};
use stag_core::stag::{build_stag, neighborhood_partitions, StagGraph};
use stag_core::Error;

fn aux(g: &Graph) -> Graph {
    build_stag(g, 100_000).unwrap().into_graph()
}

fn round_trip(g: &Graph) {
    let h = aux(g);
    let back = invert(&h).unwrap_or_else(|e| panic!("{e} for {:?}", g.edges()));
    assert!(are_isomorphic(&aux(&back), &h, 5000).unwrap());
    assert!(block_decomposition(&back).unwrap().bridges().is_empty());
}

#[test]
fn rejection_corpus() {
    let corpus = [
        ("P3", families::path(3)),
        ("P4", families::path(4)),
        ("P5", families::path(5)),
        ("C4", families::cycle(4)),
        ("C6", families::cycle(6)),
        ("C8", families::cycle(8)),
        ("K1,2", families::star(2)),
        ("K1,3", families::star(3)),
        ("K1,4", families::star(4)),
        ("petersen", families::petersen()),
    ];
    for (name, h) in corpus {
        assert!(matches!(invert(&h), Err(Error::NotAStag(_))), "{name}");
        assert!(brute_force_is_stag(&h, 7).unwrap().is_none(), "{name}");
    }
}

#[test]
fn invert_agrees_with_exhaustive_search() {
    let mut candidates: Vec<Graph> = families::fixtures()
        .into_iter()
        .map(|(_, g)| aux(&g))
        .filter(|h| h.vertex_count() <= 40)
        .collect();
    candidates.extend([families::complete(3), families::complete(5), families::complete(2), families::diamond()]);
    for h in candidates {
        let fast = invert(&h).is_ok();
        let slow = brute_force_is_stag(&h, 6).unwrap().is_some();
        assert_eq!(fast, slow, "{:?}", h.edges());
    }
}

#[test]
fn fixtures_round_trip() {
    for (_, g) in families::fixtures() {
        let minimal = block_decomposition(&g).unwrap().bridges().is_empty();
        if minimal {
            round_trip(&g);
        }
    }
    round_trip(&families::complete(5));
    round_trip(&families::prism());
    round_trip(&Graph::new(1));
}

/// Ground-truth labelling at `v`: tree edges labelled by the non-tree edges
/// whose fundamental cycle contains them.
fn ground_truth_split(s: &StagGraph, v: usize) -> NeighborhoodSplit {
    let p = neighborhood_partitions(s, v).unwrap();
    let sorted = |mut c: Vec<usize>| {
        c.sort_unstable();
        c
    };
    NeighborhoodSplit {
        cut: p.cut_classes.into_iter().map(|(_, c)| sorted(c)).collect(),
        cycle: p.cycle_classes.into_iter().map(|(_, c)| sorted(c)).collect(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn random_two_connected_round_trip(seed in any::<u64>()) {
        let g = random_two_connected_sized(3, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(2000u32));
        round_trip(&g);
        let p = infer_params(&aux(&g)).unwrap();
        let all: Vec<(usize, usize)> = std::iter::once((p.n, p.m)).chain(p.alternatives.iter().copied()).collect();
        prop_assert!(all.contains(&(g.vertex_count(), g.edge_count())));
    }

    #[test]
    fn random_minimal_round_trip(seed in any::<u64>()) {
        let g = random_connected_sized(3, 7, &mut rng(seed));
        prop_assume!(block_decomposition(&g).unwrap().bridges().is_empty());
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(2000u32));
        round_trip(&g);
    }

    /// Labels read off the true partitions: each cycle's edges form a path
    /// in the tree, and distinct cycles have distinct edge sets.
    #[test]
    fn ground_truth_labels(seed in any::<u64>()) {
        let g = random_two_connected_sized(3, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(2000u32));
        let s = build_stag(&g, 2000).unwrap();
        let v = (seed as usize) % s.vertex_count();
        let split = ground_truth_split(&s, v);
        let items = label_split(&split).unwrap();
        let t = &s.trees().unwrap()[v];
        let nt: Vec<usize> = t.non_tree_edges(&g).collect();
        for (j, &e) in nt.iter().enumerate() {
            let cycle = fundamental_cycle(&g, t, e).unwrap();
            let labelled: Vec<usize> = t.edges().iter().copied().filter(|f| {
                let i = t.edges().iter().position(|x| x == f).unwrap();
                items[i].label.contains(&j)
            }).collect();
            let mut want: Vec<usize> = cycle.into_iter().filter(|&f| f != e).collect();
            want.sort_unstable();
            prop_assert_eq!(labelled, want);
        }
        let layout = layout_tree(&items, g.vertex_count()).unwrap();
        for c in layout.cycle_ids() {
            prop_assert!(layout.path_ends(c).is_some());
        }
        // the recovered splits include the true one
        let mut canonical = split.clone();
        canonical.cut.sort();
        canonical.cycle.sort();
        prop_assert!(neighborhood_splits(s.graph(), v).unwrap().contains(&canonical));
    }
}
