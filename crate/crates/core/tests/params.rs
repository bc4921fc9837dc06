use num_bigint::BigUint;
use proptest::prelude::*;
use stag_core::generate::{random_connected_sized, rng};
use stag_core::graph::{families, DEFAULT_MAX_N};
use stag_core::params::param_report;
use stag_core::spanning::count_spanning_trees;

#[test]
fn fixtures_satisfy_all_relations() {
    for (name, g) in families::fixtures() {
        let r = param_report(&g, 100_000, DEFAULT_MAX_N).unwrap();
        assert!(r.all_hold(), "{name}\n{}", r.to_table());
        assert_eq!(r.diam_aux, r.diam_symdiff, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn relations_hold(seed in any::<u64>()) {
        let g = random_connected_sized(1, 7, &mut rng(seed));
        prop_assume!(count_spanning_trees(&g) <= BigUint::from(1500u32));
        let r = param_report(&g, 1500, DEFAULT_MAX_N).unwrap();
        prop_assert!(r.all_hold(), "{}", r.to_table());
        prop_assert_eq!(r.diam_aux, r.diam_symdiff);
        prop_assert_eq!(r.relations.last().unwrap().holds.is_none(), r.circumference_g.is_none());
    }
}
