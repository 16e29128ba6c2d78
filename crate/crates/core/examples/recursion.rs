// SPDX-License-Identifier: Apache-2.0

//! Level-by-level recursion against the closed form, with one shared cache.

use dendro::{path_count_closed, DendrimerParams, RecursiveCounter};

fn main() -> Result<(), dendro::Error> {
    let k = 5;
    let mut counter = RecursiveCounter::new(k)?;
    for n in 1..=8 {
        let p = DendrimerParams::new(n, k)?;
        let mut agree = 0;
        for ell in 1..=p.diameter() {
            let rec = counter.count(n, ell)?;
            assert_eq!(rec, path_count_closed(&p, ell)?);
            agree += 1;
        }
        println!("{p}: recursion matches closed form on all {agree} lengths");
    }
    let big = counter.count(8, 9)?;
    println!("n_9(T(8,5)) = {big}");
    Ok(())
}
