// SPDX-License-Identifier: Apache-2.0

//! Runs the cross-check sweep programmatically.

use dendro::report::verification_to_text;
use dendro::verify::{run_sweep, SweepConfig};

fn main() -> Result<(), dendro::Error> {
    let mut cfg = SweepConfig::new(5, 5);
    cfg.seed = 42;
    let summary = run_sweep(&cfg)?;
    print!("{}", verification_to_text(&summary));
    std::process::exit(if summary.passed() { 0 } else { 2 });
}
