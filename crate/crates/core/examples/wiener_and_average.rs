// SPDX-License-Identifier: Apache-2.0

//! Wiener index three ways and the exact average distance.

use dendro::{average_distance, build_dendrimer, wiener_brute, wiener_closed, wiener_from_counts, DendrimerParams};

fn main() -> Result<(), dendro::Error> {
    for (n, k) in [(1, 3), (2, 3), (3, 4), (4, 5), (3, 2)] {
        let p = DendrimerParams::new(n, k)?;
        let sum = wiener_from_counts(&p);
        let brute = wiener_brute(&build_dendrimer(&p)?);
        let closed = if p.is_path() { "n/a".to_string() } else { wiener_closed(&p)?.to_string() };
        println!("{p}: W sum={sum} closed={closed} brute={brute}  mu={}", average_distance(&p));
    }

    // Far beyond anything the explicit graph could hold.
    let p = DendrimerParams::new(64, 16)?;
    let w = wiener_closed(&p)?;
    assert_eq!(w, wiener_from_counts(&p));
    println!("{p}: W has {} decimal digits", w.to_string().len());
    Ok(())
}
