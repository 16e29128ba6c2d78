// SPDX-License-Identifier: Apache-2.0

//! Exact path counting on dendrimers.
//!
//! A dendrimer `T(n, k)` is the balanced rooted tree of radius `n` in which
//! every vertex closer than `n` to the root has degree `k`. This crate counts
//! the paths of every length in `T(n, k)` with closed-form and recursive
//! formulas, derives the Wiener index, average distance and ς-medium
//! domination number from those counts, and ships a brute-force graph oracle
//! that builds the tree explicitly so every formula can be cross-checked.
//!
//! All arithmetic is exact: counts are [`ExactInt`] (arbitrary precision) and
//! ratios are reduced [`ExactRatio`] values.
//!
//! ```
//! use dendro::{DendrimerParams, path_count_table, wiener_from_counts, average_distance};
//!
//! let p = DendrimerParams::new(2, 3).unwrap();
//! let table = path_count_table(&p);
//! assert_eq!(table.get(4).unwrap().to_string(), "12");
//! assert_eq!(wiener_from_counts(&p).to_string(), "117");
//! assert_eq!(average_distance(&p).to_string(), "13/5");
//! ```

pub mod cli;
pub mod dendrimer;
pub mod error;
pub mod exact_arith;
pub mod indices;
pub mod oracle;
pub mod paths;
pub mod report;
pub mod verify;

pub use dendrimer::DendrimerParams;
pub use error::{Error, Result};
pub use exact_arith::{binomial, exact_div, geometric_sum, ExactInt, ExactRatio};
pub use indices::{
    average_distance, build_report, medium_domination, sigma_sum, sigma_sum_closed,
    total_distance_from_counts, wiener_closed, wiener_from_counts, IndexReport,
};
pub use oracle::{
    build_dendrimer, distance_histogram, endpoint_breakdown, random_tree, wiener_brute,
    EndpointBreakdown, OracleLimits, TreeGraph,
};
pub use paths::{
    identity_check, n1_leaf_paths, n2_leaf_paths, path_count_closed, path_count_recursive,
    path_count_table, IdentityReport, PathLengthTable, RecursiveCounter,
};
