use num_bigint::BigUint;
use proptest::prelude::*;
use stag_core::factor::{is_prime, prime_factorize, product_of_block_stags};
use stag_core::generate::{random_multi_block, random_two_connected_sized, rng};
use stag_core::graph::{are_isomorphic, block_decomposition, cartesian_product, families, Graph};
use stag_core::spanning::count_spanning_trees;
use stag_core::stag::build_stag;

fn tree_count_at_most(g: &Graph, k: u32) -> bool {
    count_spanning_trees(g) <= BigUint::from(k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn aux_is_product_over_blocks(seed in any::<u64>()) {
        let g = random_multi_block(8, &mut rng(seed));
        prop_assume!(block_decomposition(&g).unwrap().blocks.len() >= 2);
        prop_assume!(tree_count_at_most(&g, 2000));
        let direct = build_stag(&g, 2000).unwrap();
        let product = product_of_block_stags(&g, 2000).unwrap();
        prop_assert!(are_isomorphic(direct.graph(), product.graph(), 5000).unwrap());
    }

    #[test]
    fn aux_of_two_connected_is_prime(seed in any::<u64>()) {
        let g = random_two_connected_sized(3, 6, &mut rng(seed));
        let aux = build_stag(&g, 100_000).unwrap();
        prop_assert!(is_prime(aux.graph(), 5000).unwrap());
    }

    /// Triangles of a product never mix coordinate directions.
    #[test]
    fn product_triangles_stay_in_one_factor(seed in any::<u64>()) {
        let a = random_two_connected_sized(3, 5, &mut rng(seed));
        let b = random_two_connected_sized(3, 4, &mut rng(seed ^ 0x9e37));
        let p = cartesian_product(&a, &b);
        let nb = b.vertex_count();
        let dir = |u: usize, v: usize| (u / nb == v / nb) as u8;
        for x in p.vertices() {
            for y in p.neighbors(x).filter(|&y| y > x) {
                for z in p.neighbors(y).filter(|&z| z > y && p.has_edge(x, z)) {
                    prop_assert!(dir(x, y) == dir(y, z) && dir(y, z) == dir(x, z));
                }
            }
        }
    }

    #[test]
    fn factorization_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a = build_stag(&random_two_connected_sized(3, 5, &mut r), 1000).unwrap().into_graph();
        let b = build_stag(&random_two_connected_sized(3, 4, &mut r), 1000).unwrap().into_graph();
        prop_assume!(a.vertex_count() * b.vertex_count() <= 1500);
        let f = prime_factorize(&cartesian_product(&a, &b), 5000).unwrap();
        prop_assert_eq!(f.factors.len(), 2);
        let (big, small) = if a.vertex_count() >= b.vertex_count() { (&a, &b) } else { (&b, &a) };
        if big.vertex_count() != small.vertex_count() {
            prop_assert!(are_isomorphic(&f.factors[0], big, 5000).unwrap());
            prop_assert!(are_isomorphic(&f.factors[1], small, 5000).unwrap());
        } else {
            let direct = are_isomorphic(&f.factors[0], big, 5000).unwrap() && are_isomorphic(&f.factors[1], small, 5000).unwrap();
            let swapped = are_isomorphic(&f.factors[0], small, 5000).unwrap() && are_isomorphic(&f.factors[1], big, 5000).unwrap();
            prop_assert!(direct || swapped);
        }
    }
}

#[test]
fn fixture_products() {
    for (name, g) in families::fixtures() {
        let direct = build_stag(&g, 10_000).unwrap();
        let product = product_of_block_stags(&g, 10_000).unwrap();
        assert!(are_isomorphic(direct.graph(), product.graph(), 5000).unwrap(), "{name}");
    }
    let q3 = cartesian_product(&families::cycle(4), &families::complete(2));
    assert_eq!(prime_factorize(&q3, 100).unwrap().factors.len(), 3);
}
