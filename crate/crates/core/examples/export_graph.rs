// SPDX-License-Identifier: Apache-2.0

//! Edge-list and DOT export, and re-ingesting the edge list.

use dendro::oracle::{export_dot, export_edge_list};
use dendro::report::from_edge_list;
use dendro::{build_dendrimer, DendrimerParams};

fn main() -> Result<(), dendro::Error> {
    let g = build_dendrimer(&DendrimerParams::new(2, 3)?)?;
    let edges = export_edge_list(&g);
    print!("{edges}");
    print!("{}", export_dot(&g));

    let back = from_edge_list(&edges)?;
    assert_eq!(back, g);
    println!("round trip ok: {} vertices, origin {:?}", back.vertex_count(), back.origin());

    match from_edge_list("0 1\n2 3\n") {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
