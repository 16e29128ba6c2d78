// SPDX-License-Identifier: Apache-2.0

//! Path counts of every length in T(n, k), split by leaf endpoints.
//!
//! cargo run --example path_counts -- 3 4

use dendro::{n1_leaf_paths, n2_leaf_paths, path_count_table, DendrimerParams};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<u32> = std::env::args().skip(1).map(|a| a.parse()).collect::<Result<_, _>>()?;
    let (n, k) = match args.as_slice() {
        [n, k] => (*n, *k),
        _ => (3, 4),
    };
    let p = DendrimerParams::new(n, k)?;
    println!("{p}: {} vertices, {} leaves, diameter {}", p.vertex_count(), p.leaf_count(), p.diameter());

    let table = path_count_table(&p);
    println!("{:>4} {:>20} {:>20} {:>20}", "len", "all", "one leaf end", "two leaf ends");
    for (ell, count) in table.iter() {
        if p.is_path() {
            println!("{ell:>4} {count:>20}");
        } else {
            let one = n1_leaf_paths(&p, ell)?;
            let two = n2_leaf_paths(&p, ell)?;
            println!("{ell:>4} {count:>20} {one:>20} {two:>20}");
        }
    }
    println!("total {} = C({}, 2)", table.total(), p.vertex_count());
    Ok(())
}
