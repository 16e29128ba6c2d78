// SPDX-License-Identifier: Apache-2.0

//! Total distance as a length-weighted path count, on arbitrary trees.

use dendro::oracle::random_tree_seeded;
use dendro::{distance_histogram, total_distance_from_counts, wiener_brute};

fn main() {
    for seed in 0..5 {
        let t = random_tree_seeded(40 + 30 * seed as usize, seed);
        let hist = distance_histogram(&t);
        let weighted = total_distance_from_counts(&hist);
        assert_eq!(weighted, wiener_brute(&t));
        println!(
            "seed {seed}: V={} diameter={} total distance={weighted}",
            t.vertex_count(),
            hist.keys().max().unwrap()
        );
    }
}
