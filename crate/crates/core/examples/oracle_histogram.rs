// SPDX-License-Identifier: Apache-2.0

//! Builds T(n, k) explicitly and compares its distance histogram with the
//! closed-form counts.

use dendro::oracle::endpoint_breakdowns;
use dendro::{build_dendrimer, distance_histogram, path_count_closed, DendrimerParams};

fn main() -> Result<(), dendro::Error> {
    let p = DendrimerParams::new(4, 3)?;
    let g = build_dendrimer(&p)?;
    println!("{p}: built {} vertices, degree census {:?}", g.vertex_count(), g.degree_census());

    let hist = distance_histogram(&g);
    let breakdown = endpoint_breakdowns(&g);
    println!("{:>4} {:>8} {:>8} {:>8} {:>8} {:>8}", "len", "oracle", "closed", "no leaf", "1 leaf", "2 leaves");
    for (ell, count) in &hist {
        let b = &breakdown[ell];
        println!(
            "{ell:>4} {count:>8} {:>8} {:>8} {:>8} {:>8}",
            path_count_closed(&p, *ell)?,
            b.neither_leaf,
            b.one_leaf,
            b.both_leaves
        );
    }
    Ok(())
}
