// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;

use dendro::oracle::{export_edge_list, random_tree_seeded};
use dendro::report::{from_edge_list, from_json, to_json, ReportDocument};
use dendro::{
    binomial, build_report, distance_histogram, path_count_closed, path_count_recursive,
    path_count_table, total_distance_from_counts, wiener_brute, wiener_closed,
    wiener_from_counts, DendrimerParams,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn total_distance_equals_weighted_histogram(size in 1usize..=200, seed in any::<u64>()) {
        let t = random_tree_seeded(size, seed);
        prop_assert_eq!(total_distance_from_counts(&distance_histogram(&t)), wiener_brute(&t));
    }

    #[test]
    fn random_trees_round_trip_through_edge_lists(size in 2usize..=120, seed in any::<u64>()) {
        let t = random_tree_seeded(size, seed);
        prop_assert_eq!(from_edge_list(&export_edge_list(&t)).unwrap(), t);
    }

    #[test]
    fn recursion_agrees_beyond_the_test_grid(n in 1u32..=40, k in 3u32..=30, ell in 1u32..=90) {
        let p = DendrimerParams::new(n, k).unwrap();
        prop_assert_eq!(path_count_recursive(&p, ell).unwrap(), path_count_closed(&p, ell).unwrap());
    }

    #[test]
    fn table_sums_to_pair_count(n in 1u32..=40, k in 2u32..=30) {
        let p = DendrimerParams::new(n, k).unwrap();
        prop_assert_eq!(path_count_table(&p).total(), binomial(&p.vertex_count(), 2));
        if k >= 3 {
            prop_assert_eq!(wiener_closed(&p).unwrap(), wiener_from_counts(&p));
        }
    }

    #[test]
    fn json_round_trip(n in 1u32..=40, k in 2u32..=30, sigma_bits in any::<u64>()) {
        let p = DendrimerParams::new(n, k).unwrap();
        let sigmas: Vec<u32> = (2..=2 * n).filter(|s| sigma_bits >> (s % 64) & 1 == 1).collect();
        let doc = ReportDocument::from(build_report(&p, &sigmas).unwrap());
        prop_assert_eq!(from_json(&to_json(&doc)).unwrap(), doc);
    }
}
