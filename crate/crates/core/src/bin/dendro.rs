// SPDX-License-Identifier: Apache-2.0

use dendro::cli::{run, EXIT_USAGE};
use dendro::OracleLimits;

fn main() {
    let limits = match OracleLimits::from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(EXIT_USAGE);
        }
    };
    let code = run(
        std::env::args_os(),
        &limits,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
