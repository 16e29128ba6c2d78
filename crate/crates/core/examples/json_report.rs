// SPDX-License-Identifier: Apache-2.0

//! Full index report as JSON and CSV; big values stay decimal strings.

use dendro::report::{from_json, report_to_csv, to_json, ReportDocument};
use dendro::{build_report, DendrimerParams};

fn main() -> Result<(), dendro::Error> {
    let p = DendrimerParams::new(2, 3)?;
    let doc = ReportDocument::from(build_report(&p, &[2, 3, 4])?);
    let json = to_json(&doc);
    print!("{json}");
    assert_eq!(from_json(&json)?, doc);

    let big = build_report(&DendrimerParams::new(20, 9)?, &[])?;
    print!("{}", report_to_csv(&big));
    Ok(())
}
