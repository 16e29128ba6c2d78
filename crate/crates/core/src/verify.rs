// SPDX-License-Identifier: Apache-2.0

//! Cross-check sweep over a grid of `(n, k)` cells.
//!
//! Each check family compares two independent routes to the same quantity:
//! closed form against the explicit graph, recursion against closed form,
//! leaf-endpoint lemmas against the oracle's classification, and so on.
//! Cells are processed in parallel; results are merged in `(n, k)` order so
//! the report and the first counterexample are deterministic.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dendrimer::DendrimerParams;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, ExactInt, ExactRatio};
use crate::indices::{sigma_sum, sigma_sum_closed, total_distance_from_counts, wiener_closed};
use crate::oracle::{
    build_dendrimer_with, distance_histogram, endpoint_breakdowns, random_tree, wiener_brute,
    OracleLimits,
};
use crate::paths::{identity_check, n1_leaf_paths, n2_leaf_paths, path_count_closed, RecursiveCounter};

/// Signature of a path-count routine that can be swapped into the sweep.
pub type PathCountFn = fn(&DendrimerParams, u32) -> Result<ExactInt>;

/// Largest radius and degree a sweep accepts.
pub const MAX_SWEEP_N: u32 = 64;
pub const MAX_SWEEP_K: u32 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Family {
    CensusVsOracle,
    ClosedVsOracle,
    OneLeafVsOracle,
    TwoLeafVsOracle,
    RecursiveVsClosed,
    PairCountIdentity,
    WienerClosedVsSum,
    WienerSumVsOracle,
    AverageDistance,
    SigmaClosedVsDirect,
    TotalDistanceRandomTrees,
}

const FAMILIES: [Family; 11] = [
    Family::CensusVsOracle,
    Family::ClosedVsOracle,
    Family::OneLeafVsOracle,
    Family::TwoLeafVsOracle,
    Family::RecursiveVsClosed,
    Family::PairCountIdentity,
    Family::WienerClosedVsSum,
    Family::WienerSumVsOracle,
    Family::AverageDistance,
    Family::SigmaClosedVsDirect,
    Family::TotalDistanceRandomTrees,
];

impl Family {
    fn name(self) -> &'static str {
        match self {
            Family::CensusVsOracle => "census_vs_oracle",
            Family::ClosedVsOracle => "closed_vs_oracle",
            Family::OneLeafVsOracle => "one_leaf_lemma_vs_oracle",
            Family::TwoLeafVsOracle => "two_leaf_lemma_vs_oracle",
            Family::RecursiveVsClosed => "recursive_vs_closed",
            Family::PairCountIdentity => "pair_count_identity",
            Family::WienerClosedVsSum => "wiener_closed_vs_sum",
            Family::WienerSumVsOracle => "wiener_sum_vs_oracle",
            Family::AverageDistance => "average_distance",
            Family::SigmaClosedVsDirect => "sigma_closed_vs_direct",
            Family::TotalDistanceRandomTrees => "total_distance_random_trees",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub max_n: u32,
    pub max_k: u32,
    /// Cells with more vertices than this skip the explicit-graph checks.
    pub oracle_max_vertices: u64,
    pub random_trees: usize,
    pub random_tree_max_vertices: usize,
    pub seed: u64,
    /// Routine checked against the oracle and the recursion.
    pub path_count: PathCountFn,
}

impl SweepConfig {
    pub const DEFAULT_ORACLE_MAX_VERTICES: u64 = 5_000;

    pub fn new(max_n: u32, max_k: u32) -> Self {
        Self {
            max_n,
            max_k,
            oracle_max_vertices: Self::DEFAULT_ORACLE_MAX_VERTICES,
            random_trees: 200,
            random_tree_max_vertices: 200,
            seed: 0,
            path_count: path_count_closed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.max_n < 1 || self.max_n > MAX_SWEEP_N {
            return Err(Error::InvalidBounds(format!(
                "max-n must lie in 1..={MAX_SWEEP_N}, got {}",
                self.max_n
            )));
        }
        if self.max_k < 2 || self.max_k > MAX_SWEEP_K {
            return Err(Error::InvalidBounds(format!(
                "max-k must lie in 2..={MAX_SWEEP_K}, got {}",
                self.max_k
            )));
        }
        if self.random_trees > 0 && self.random_tree_max_vertices < 2 {
            return Err(Error::InvalidBounds("random trees need at least 2 vertices".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub family: String,
    pub instances: u64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationSummary {
    pub checks: Vec<CheckOutcome>,
    /// First mismatch found, scanning cells in `(n, k)` order.
    pub counterexample: Option<String>,
}

impl VerificationSummary {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Debug, Default, Clone)]
struct Tally {
    counts: [u64; FAMILIES.len()],
    failures: Vec<(Family, String)>,
}

impl Tally {
    fn check(&mut self, fam: Family, ok: bool, detail: impl FnOnce() -> String) {
        self.counts[fam as usize] += 1;
        if !ok {
            self.failures.push((fam, format!("{}: {}", fam.name(), detail())));
        }
    }

    fn compare(&mut self, fam: Family, at: &str, expected: &ExactInt, got: &Result<ExactInt>) {
        let ok = matches!(got, Ok(g) if g == expected);
        self.check(fam, ok, || match got {
            Ok(g) => format!("{at} expected={expected} got={g}"),
            Err(e) => format!("{at} expected={expected} error: {e}"),
        });
    }

    fn absorb(&mut self, other: Tally) {
        for (mine, theirs) in self.counts.iter_mut().zip(other.counts) {
            *mine += theirs;
        }
        self.failures.extend(other.failures);
    }
}

fn check_cell(p: DendrimerParams, cfg: &SweepConfig) -> Tally {
    let mut t = Tally::default();
    let (n, k) = (p.n(), p.k());
    let at = |ell: u32| format!("n={n} k={k} ell={ell}");
    let cell = format!("n={n} k={k}");
    let branching = k >= 3;

    let closed: Vec<Result<ExactInt>> = (1..=p.diameter()).map(|l| (cfg.path_count)(&p, l)).collect();

    if branching {
        let mut rec = RecursiveCounter::new(k).expect("k >= 3");
        for ell in 1..=p.diameter() {
            match rec.count(n, ell) {
                Ok(r) => t.compare(Family::RecursiveVsClosed, &at(ell), &r, &closed[ell as usize - 1]),
                Err(e) => t.check(Family::RecursiveVsClosed, false, || format!("{} error: {e}", at(ell))),
            }
        }

        match identity_check(&p) {
            Ok(r) => t.check(Family::PairCountIdentity, r.holds, || {
                format!("{cell} expected={} got={}", r.pairs, r.path_total)
            }),
            Err(e) => t.check(Family::PairCountIdentity, false, || format!("{cell} error: {e}")),
        }
    }

    let pairs = binomial(&p.vertex_count(), 2);
    let table_wiener = closed
        .iter()
        .enumerate()
        .map(|(i, c)| c.as_ref().map(|c| c * (i as u32 + 1)).map_err(Clone::clone))
        .sum::<Result<ExactInt>>();
    if branching {
        if let Ok(w) = &table_wiener {
            t.compare(Family::WienerClosedVsSum, &cell, w, &wiener_closed(&p));
        } else {
            t.check(Family::WienerClosedVsSum, false, || format!("{cell} path counts failed"));
        }
    }

    match &table_wiener {
        Ok(w) => {
            let ok = ExactRatio::new(w.clone(), pairs.clone())
                .map(|mu| {
                    mu.mul_int(&pairs) == ExactRatio::from_integer(w.clone())
                        && mu >= ExactRatio::from_integer(1u32.into())
                        && mu <= ExactRatio::from_integer(p.diameter().into())
                })
                .unwrap_or(false);
            t.check(Family::AverageDistance, ok, || format!("{cell} W={w} pairs={pairs}"));
        }
        Err(e) => t.check(Family::AverageDistance, false, || format!("{cell} error: {e}")),
    }

    if branching {
        let mut previous: Option<ExactInt> = None;
        for sigma in 2..=p.diameter() {
            let direct = sigma_sum(&p, sigma);
            t.compare(
                Family::SigmaClosedVsDirect,
                &format!("n={n} k={k} sigma={sigma}"),
                direct.as_ref().unwrap_or(&ExactInt::from(0u32)),
                &sigma_sum_closed(&p, sigma),
            );
            if let Ok(d) = &direct {
                let monotone = previous.as_ref().is_none_or(|prev| prev <= d);
                let full = sigma != p.diameter() || *d == pairs;
                t.check(Family::SigmaClosedVsDirect, monotone && full, || {
                    format!("n={n} k={k} sigma={sigma} not monotone or not total at diameter")
                });
                previous = Some(d.clone());
            }
        }
    }

    if p.vertex_count() <= ExactInt::from(cfg.oracle_max_vertices) {
        let g = build_dendrimer_with(&p, &OracleLimits::new(cfg.oracle_max_vertices))
            .expect("cell admitted by the oracle limit");
        let census = g.degree_census();
        let leaves = ExactInt::from(*census.get(&1).unwrap_or(&0) as u64);
        let internal = ExactInt::from(*census.get(&(k as usize)).unwrap_or(&0) as u64);
        t.compare(Family::CensusVsOracle, &format!("{cell} vertices"), &ExactInt::from(g.vertex_count() as u64), &Ok(p.vertex_count()));
        t.compare(Family::CensusVsOracle, &format!("{cell} leaves"), &leaves, &Ok(p.leaf_count()));
        t.compare(Family::CensusVsOracle, &format!("{cell} internal"), &internal, &Ok(p.internal_vertex_count()));

        let hist = distance_histogram(&g);
        let zero = ExactInt::from(0u32);
        for ell in 1..=p.diameter() {
            let oracle = hist.get(&ell).unwrap_or(&zero);
            t.compare(Family::ClosedVsOracle, &at(ell), oracle, &closed[ell as usize - 1]);
        }
        if branching {
            let breakdown = endpoint_breakdowns(&g);
            for ell in 1..=p.diameter() {
                let (one, two) = breakdown
                    .get(&ell)
                    .map(|b| (b.one_leaf.clone(), b.both_leaves.clone()))
                    .unwrap_or((zero.clone(), zero.clone()));
                t.compare(Family::OneLeafVsOracle, &at(ell), &one, &n1_leaf_paths(&p, ell));
                t.compare(Family::TwoLeafVsOracle, &at(ell), &two, &n2_leaf_paths(&p, ell));
            }
        }
        let brute = wiener_brute(&g);
        t.compare(Family::WienerSumVsOracle, &cell, &brute, &table_wiener);
    }
    t
}

fn check_random_trees(cfg: &SweepConfig) -> Tally {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let sizes: Vec<(usize, u64)> = (0..cfg.random_trees)
        .map(|_| (rng.gen_range(2..=cfg.random_tree_max_vertices), rng.gen()))
        .collect();
    let results: Vec<Tally> = sizes
        .par_iter()
        .enumerate()
        .map(|(i, &(size, tree_seed))| {
            let tree = random_tree(size, &mut ChaCha8Rng::seed_from_u64(tree_seed));
            let mut t = Tally::default();
            let brute = wiener_brute(&tree);
            let via_counts = total_distance_from_counts(&distance_histogram(&tree));
            t.compare(
                Family::TotalDistanceRandomTrees,
                &format!("tree #{i} (V={size}, seed={})", cfg.seed),
                &brute,
                &Ok(via_counts),
            );
            t
        })
        .collect();
    let mut total = Tally::default();
    for r in results {
        total.absorb(r);
    }
    total
}

/// Runs every check family over `1..=max_n × 2..=max_k` plus the seeded
/// random-tree batch.
pub fn run_sweep(cfg: &SweepConfig) -> Result<VerificationSummary> {
    cfg.validate()?;
    let cells: Vec<DendrimerParams> = (1..=cfg.max_n)
        .flat_map(|n| (2..=cfg.max_k).map(move |k| DendrimerParams::new(n, k).expect("valid grid")))
        .collect();
    let per_cell: Vec<Tally> = cells.par_iter().map(|&p| check_cell(p, cfg)).collect();

    let mut total = Tally::default();
    for t in per_cell {
        total.absorb(t);
    }
    total.absorb(check_random_trees(cfg));

    let counterexample = total.failures.first().map(|(_, msg)| msg.clone());
    let checks = FAMILIES
        .iter()
        .filter(|f| total.counts[**f as usize] > 0)
        .map(|&f| CheckOutcome {
            family: f.name().to_string(),
            instances: total.counts[f as usize],
            passed: !total.failures.iter().any(|(g, _)| *g == f),
        })
        .collect();
    Ok(VerificationSummary {
        checks,
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn off_by_one(p: &DendrimerParams, ell: u32) -> Result<ExactInt> {
        let v = path_count_closed(p, ell)?;
        Ok(if ell == 3 && p.n() == 2 { v + 1u32 } else { v })
    }

    #[test]
    fn small_grid_passes() {
        let s = run_sweep(&SweepConfig::new(4, 4)).unwrap();
        assert!(s.passed(), "{s:?}");
        assert!(s.checks.len() >= 6);
        assert!(s.counterexample.is_none());
    }

    #[test]
    fn star_only_sweep_passes() {
        let s = run_sweep(&SweepConfig::new(1, 3)).unwrap();
        assert!(s.passed(), "{s:?}");
    }

    #[test]
    fn injected_bug_is_reported() {
        let mut cfg = SweepConfig::new(3, 3);
        cfg.path_count = off_by_one;
        let s = run_sweep(&cfg).unwrap();
        assert!(!s.passed());
        let cx = s.counterexample.unwrap();
        assert!(cx.contains("n=2 k=2 ell=3"), "{cx}");
        assert!(cx.contains("expected=2 got=3"), "{cx}");
    }

    #[test]
    fn bounds_are_validated() {
        assert!(run_sweep(&SweepConfig::new(0, 4)).is_err());
        assert!(run_sweep(&SweepConfig::new(2, 1)).is_err());
        assert!(run_sweep(&SweepConfig::new(MAX_SWEEP_N + 1, 3)).is_err());
    }
}
