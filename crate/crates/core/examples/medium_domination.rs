// SPDX-License-Identifier: Apache-2.0

//! Sigma-medium domination numbers for every threshold up to the diameter.

use dendro::{medium_domination, sigma_sum, sigma_sum_closed, DendrimerParams};

fn main() -> Result<(), dendro::Error> {
    let p = DendrimerParams::new(3, 3)?;
    println!("{p}, {} vertices", p.vertex_count());
    for sigma in 2..=p.diameter() {
        let direct = sigma_sum(&p, sigma)?;
        assert_eq!(direct, sigma_sum_closed(&p, sigma)?);
        println!("sigma={sigma}: {direct:>4} paths, gamma = {}", medium_domination(&p, sigma)?);
    }
    Ok(())
}
