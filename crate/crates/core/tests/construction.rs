use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use proptest::prelude::*;
use stag_core::generate::{random_connected_sized, rng};
use stag_core::graph::{families, is_connected, Graph};
use stag_core::oracles::{brute_force_stag, brute_force_trees};
use stag_core::spanning::{
    count_spanning_trees, enumerate_spanning_trees, type1_neighbors, type2_neighbors, SpanningTree,
};
use stag_core::stag::build_stag;

fn symdiff_two(trees: &[SpanningTree], t: &SpanningTree) -> BTreeSet<SpanningTree> {
    trees
        .iter()
        .filter(|u| t.symmetric_difference_len(u) == 2)
        .cloned()
        .collect()
}

#[test]
fn fixture_counts() {
    let expected: HashMap<&str, u32> =
        [("C3", 3), ("K4", 16), ("diamond", 8), ("theta", 12), ("bowtie", 9)].into();
    for (name, g) in families::fixtures() {
        let count = count_spanning_trees(&g);
        assert_eq!(count, BigUint::from(brute_force_trees(&g).unwrap().len()), "{name}");
        if let Some(&want) = expected.get(name) {
            assert_eq!(count, BigUint::from(want), "{name}");
        }
    }
    assert_eq!(count_spanning_trees(&families::complete(5)), BigUint::from(125u32));
}

#[test]
fn fixtures_match_oracle() {
    for (name, g) in families::fixtures() {
        let fast = build_stag(&g, 100_000).unwrap();
        let slow = brute_force_stag(&g).unwrap();
        assert_eq!(fast.trees(), slow.trees(), "{name}");
        assert_eq!(fast.graph(), slow.graph(), "{name}");
    }
}

#[test]
fn three_way_neighbours_on_fixtures() {
    for (name, g) in families::fixtures() {
        let trees = enumerate_spanning_trees(&g, 100_000).unwrap();
        for t in &trees {
            let t1 = type1_neighbors(&g, t);
            assert_eq!(t1, type2_neighbors(&g, t), "{name} {t}");
            assert_eq!(t1, symdiff_two(&trees, t), "{name} {t}");
        }
    }
}

/// Largest BFS distance in the exchange graph, computed directly on trees.
fn exchange_eccentricity(g: &Graph, trees: &[SpanningTree], start: &SpanningTree) -> usize {
    let mut dist: HashMap<SpanningTree, usize> = HashMap::from([(start.clone(), 0)]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(t) = queue.pop_front() {
        let d = dist[&t];
        for u in type2_neighbors(g, &t) {
            if !dist.contains_key(&u) {
                dist.insert(u.clone(), d + 1);
                queue.push_back(u);
            }
        }
    }
    assert_eq!(dist.len(), trees.len());
    dist.into_values().max().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn build_matches_oracle(seed in any::<u64>()) {
        let g = random_connected_sized(1, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(2000u32));
        let fast = build_stag(&g, 2000).unwrap();
        let slow = brute_force_stag(&g).unwrap();
        prop_assert_eq!(fast.graph(), slow.graph());
        prop_assert!(is_connected(fast.graph()));
    }

    #[test]
    fn count_equals_enumeration(seed in any::<u64>()) {
        let g = random_connected_sized(1, 8, &mut rng(seed));
        let count = count_spanning_trees(&g);
        prop_assume!(count <= BigUint::from(20_000u32));
        let trees = enumerate_spanning_trees(&g, 20_000).unwrap();
        prop_assert_eq!(count, BigUint::from(trees.len()));
    }

    #[test]
    fn three_way_neighbours(seed in any::<u64>()) {
        let g = random_connected_sized(1, 8, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(3000u32));
        let trees = enumerate_spanning_trees(&g, 3000).unwrap();
        for t in trees.iter().step_by(1 + trees.len() / 60) {
            let t1 = type1_neighbors(&g, t);
            prop_assert_eq!(&t1, &type2_neighbors(&g, t));
            prop_assert_eq!(&t1, &symdiff_two(&trees, t));
        }
    }

    #[test]
    fn exchange_distance_at_most_n_minus_1(seed in any::<u64>()) {
        let g = random_connected_sized(1, 8, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(1500u32));
        let trees = enumerate_spanning_trees(&g, 1500).unwrap();
        for t in trees.iter().step_by(1 + trees.len() / 8) {
            prop_assert!(exchange_eccentricity(&g, &trees, t) < g.vertex_count());
        }
    }

    #[test]
    fn vertices_are_trees(seed in any::<u64>()) {
        let g = random_connected_sized(1, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(5000u32));
        let s = build_stag(&g, 5000).unwrap();
        prop_assert_eq!(BigUint::from(s.vertex_count()), count_spanning_trees(&g));
    }
}
