// SPDX-License-Identifier: Apache-2.0

//! Counting paths of every length in `T(n, k)`.
//!
//! `n_ℓ` is the number of paths with `ℓ` edges. For `k >= 3` the paths are
//! also split by how many endpoints are leaves: `n¹_ℓ` (exactly one) and
//! `n²_ℓ` (both). Three routes to `n_ℓ` are provided:
//!
//! * [`path_count_closed`]: parity-split closed form (and `2n + 1 − ℓ` on
//!   the path `k = 2`);
//! * [`path_count_recursive`]: grows `T(m, k)` from `T(m − 1, k)` one level
//!   at a time, using the leaf-endpoint counts of the smaller tree;
//! * the graph oracle in [`crate::oracle`], which enumerates vertex pairs.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::dendrimer::DendrimerParams;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, exact_div, pow, ExactInt};

fn check_length(ell: u32) -> Result<()> {
    if ell == 0 {
        Err(Error::ZeroLength)
    } else {
        Ok(())
    }
}

fn require_branching(p: &DendrimerParams, what: &'static str) -> Result<()> {
    if p.is_path() {
        Err(Error::RequiresBranching { what, k: p.k() })
    } else {
        Ok(())
    }
}

/// Paths of length `ell` with exactly one leaf endpoint.
///
/// `k(k−1)^(n+ℓ/2−2)` for even `ℓ`, `k(k−1)^(n+(ℓ−1)/2−1)` for odd `ℓ`, on
/// `1 <= ℓ <= 2n − 1`. A path of length `2n` joins two leaves, so the count is
/// zero from `ℓ = 2n` on.
pub fn n1_leaf_paths(p: &DendrimerParams, ell: u32) -> Result<ExactInt> {
    check_length(ell)?;
    require_branching(p, "one-leaf path count")?;
    Ok(n1_unchecked(p.n(), p.k(), ell))
}

fn n1_unchecked(n: u32, k: u32, ell: u32) -> ExactInt {
    if ell == 0 || ell >= 2 * n {
        return ExactInt::zero();
    }
    let exp = if ell % 2 == 0 {
        n + ell / 2 - 2
    } else {
        n + (ell - 1) / 2 - 1
    };
    ExactInt::from(k) * pow(k - 1, exp)
}

/// Paths of length `ell` whose endpoints are both leaves.
///
/// Zero for odd `ℓ` (all leaves share a level). For even `2 <= ℓ <= 2n − 2`
/// the path's midpoint sits on level `n − ℓ/2`, giving
/// `k(k−1)^(n+ℓ/2−3)·C(k−1, 2)`; at `ℓ = 2n` the midpoint is the root and the
/// count is `(k−1)^(ℓ−2)·C(k, 2)`.
pub fn n2_leaf_paths(p: &DendrimerParams, ell: u32) -> Result<ExactInt> {
    check_length(ell)?;
    require_branching(p, "two-leaf path count")?;
    Ok(n2_unchecked(p.n(), p.k(), ell))
}

fn n2_unchecked(n: u32, k: u32, ell: u32) -> ExactInt {
    if ell % 2 == 1 || ell < 2 || ell > 2 * n {
        return ExactInt::zero();
    }
    if ell == 2 * n {
        return pow(k - 1, ell - 2) * binomial(&ExactInt::from(k), 2);
    }
    ExactInt::from(k) * pow(k - 1, n + ell / 2 - 3) * binomial(&ExactInt::from(k - 1), 2)
}

/// Number of paths of length `ell` in `T(n, k)`; zero beyond the diameter.
pub fn path_count_closed(p: &DendrimerParams, ell: u32) -> Result<ExactInt> {
    check_length(ell)?;
    let (n, k) = (p.n(), p.k());
    if ell > 2 * n {
        return Ok(ExactInt::zero());
    }
    if p.is_path() {
        return Ok(ExactInt::from(2 * n + 1 - ell));
    }
    let k_big = ExactInt::from(k);
    if ell % 2 == 0 {
        // k(k−1)^(ℓ−1)/2 · [k(k−1)^(n−ℓ/2) − 2]/(k−2)
        let bracket = &k_big * pow(k - 1, n - ell / 2) - ExactInt::from(2u32);
        let numer = &k_big * pow(k - 1, ell - 1) * bracket;
        exact_div(&numer, &ExactInt::from(2 * (k - 2)))
    } else {
        // k(k−1)^h · [(k−1)^n − (k−1)^h]/(k−2), h = (ℓ−1)/2
        let half = (ell - 1) / 2;
        let bracket = pow(k - 1, n) - pow(k - 1, half);
        let numer = &k_big * pow(k - 1, half) * bracket;
        exact_div(&numer, &ExactInt::from(k - 2))
    }
}

/// Memoized level-by-level recursion for a fixed branching degree `k >= 3`.
///
/// Growing `T(m, k)` from `T(m − 1, k)` hangs `k − 1` new leaves on every old
/// leaf. A new path of length `ℓ` either has one new endpoint (an old path of
/// length `ℓ − 1` leaving from an old leaf, `(k−1)` ways per leaf end) or two
/// new endpoints (an old leaf-to-leaf path of length `ℓ − 2`, `(k−1)²` ways).
/// Zero-length old paths are single old leaves; those seed `ℓ = 1`
/// (`(k−1)` new edges per old leaf) and `ℓ = 2` (`C(k−1, 2)` sibling pairs
/// per old leaf).
#[derive(Debug, Clone)]
pub struct RecursiveCounter {
    k: u32,
    cache: HashMap<(u32, u32), ExactInt>,
}

impl RecursiveCounter {
    pub fn new(k: u32) -> Result<Self> {
        if k < 3 {
            return Err(Error::RequiresBranching {
                what: "recursive path count",
                k,
            });
        }
        Ok(Self {
            k,
            cache: HashMap::new(),
        })
    }

    /// `n_ℓ(T(m, k))`.
    pub fn count(&mut self, m: u32, ell: u32) -> Result<ExactInt> {
        check_length(ell)?;
        if m == 0 || ell > 2 * m {
            return Ok(ExactInt::zero());
        }
        // Smallest tree that contains a path of this length.
        let first = ell.div_ceil(2);
        let mut below = ExactInt::zero();
        for level in first..=m {
            below = match self.cache.get(&(level, ell)) {
                Some(v) => v.clone(),
                None => {
                    let v = self.step(level, ell, &below);
                    self.cache.insert((level, ell), v.clone());
                    v
                }
            };
        }
        Ok(below)
    }

    fn step(&self, m: u32, ell: u32, prev: &ExactInt) -> ExactInt {
        let k = self.k;
        let branch = ExactInt::from(k - 1);
        if m == 1 {
            return match ell {
                1 => ExactInt::from(k),
                2 => binomial(&ExactInt::from(k), 2),
                _ => ExactInt::zero(),
            };
        }
        let smaller = m - 1;
        let old_leaves = ExactInt::from(k) * pow(k - 1, smaller - 1);
        let one_new = if ell == 1 {
            &branch * &old_leaves
        } else if ell % 2 == 0 {
            &branch * n1_unchecked(smaller, k, ell - 1)
        } else {
            &branch * n1_unchecked(smaller, k, ell - 1)
                + ExactInt::from(2u32) * &branch * n2_unchecked(smaller, k, ell - 1)
        };
        let two_new = if ell == 2 {
            binomial(&branch, 2) * &old_leaves
        } else if ell % 2 == 0 {
            &branch * &branch * n2_unchecked(smaller, k, ell - 2)
        } else {
            ExactInt::zero()
        };
        one_new + two_new + prev
    }
}

/// `n_ℓ(T(n, k))` through the level recursion; `k >= 3` only.
pub fn path_count_recursive(p: &DendrimerParams, ell: u32) -> Result<ExactInt> {
    check_length(ell)?;
    require_branching(p, "recursive path count")?;
    RecursiveCounter::new(p.k())?.count(p.n(), ell)
}

/// Path counts for every length `1..=2n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathLengthTable {
    params: DendrimerParams,
    counts: BTreeMap<u32, ExactInt>,
}

impl PathLengthTable {
    pub fn from_counts(params: DendrimerParams, counts: BTreeMap<u32, ExactInt>) -> Self {
        Self { params, counts }
    }

    pub fn params(&self) -> &DendrimerParams {
        &self.params
    }

    pub fn counts(&self) -> &BTreeMap<u32, ExactInt> {
        &self.counts
    }

    pub fn get(&self, ell: u32) -> Option<&ExactInt> {
        self.counts.get(&ell)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &ExactInt)> {
        self.counts.iter().map(|(l, c)| (*l, c))
    }

    pub fn total(&self) -> ExactInt {
        self.counts.values().sum()
    }
}

pub fn path_count_table(p: &DendrimerParams) -> PathLengthTable {
    let counts = (1..=p.diameter())
        .map(|ell| {
            let c = path_count_closed(p, ell).expect("closed form is exact on 1..=2n");
            (ell, c)
        })
        .collect();
    PathLengthTable::from_counts(*p, counts)
}

/// Both sides of the two-way count `C(|V|, 2) = Σ_ℓ n_ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub params: DendrimerParams,
    /// `C(1 + k[(k−1)^n − 1]/(k−2), 2)`.
    pub pairs: ExactInt,
    /// Odd lengths `2j+1` for `j = 0..n−1` plus even lengths `2j` for `j = 1..n`.
    pub path_total: ExactInt,
    pub holds: bool,
}

pub fn identity_check(p: &DendrimerParams) -> Result<IdentityReport> {
    require_branching(p, "pair-count identity")?;
    let pairs = binomial(&p.vertex_count(), 2);
    let mut path_total = ExactInt::zero();
    for j in 0..p.n() {
        path_total += path_count_closed(p, 2 * j + 1)?;
    }
    for j in 1..=p.n() {
        path_total += path_count_closed(p, 2 * j)?;
    }
    Ok(IdentityReport {
        params: *p,
        holds: pairs == path_total,
        pairs,
        path_total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32, k: u32) -> DendrimerParams {
        DendrimerParams::new(n, k).unwrap()
    }

    fn int(v: u64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(n1_leaf_paths(&p(1, 3), 1).unwrap(), int(3));
        assert_eq!(n1_leaf_paths(&p(2, 3), 2).unwrap(), int(6));
        assert_eq!(n1_leaf_paths(&p(2, 3), 3).unwrap(), int(12));
        assert_eq!(n1_leaf_paths(&p(1, 3), 2).unwrap(), int(0));

        assert_eq!(n2_leaf_paths(&p(1, 3), 2).unwrap(), int(3));
        assert_eq!(n2_leaf_paths(&p(2, 3), 2).unwrap(), int(3));
        assert_eq!(n2_leaf_paths(&p(2, 3), 3).unwrap(), int(0));
        assert_eq!(n2_leaf_paths(&p(2, 3), 4).unwrap(), int(12));
        assert_eq!(n2_leaf_paths(&p(2, 3), 6).unwrap(), int(0));
    }

    #[test]
    fn lemmas_reject_bad_input() {
        assert_eq!(n1_leaf_paths(&p(2, 3), 0), Err(Error::ZeroLength));
        assert_eq!(n2_leaf_paths(&p(2, 3), 0), Err(Error::ZeroLength));
        assert!(matches!(
            n1_leaf_paths(&p(2, 2), 1),
            Err(Error::RequiresBranching { k: 2, .. })
        ));
        assert!(n2_leaf_paths(&p(2, 2), 2).is_err());
        assert!(path_count_recursive(&p(2, 2), 1).is_err());
        assert!(identity_check(&p(2, 2)).is_err());
    }

    #[test]
    fn closed_examples() {
        assert_eq!(path_count_closed(&p(2, 3), 2).unwrap(), int(12));
        assert_eq!(path_count_closed(&p(2, 3), 4).unwrap(), int(12));
        assert_eq!(path_count_closed(&p(3, 2), 4).unwrap(), int(3));
        assert_eq!(path_count_closed(&p(1, 3), 1).unwrap(), int(3));
        assert_eq!(path_count_closed(&p(2, 3), 5).unwrap(), int(0));
        assert_eq!(path_count_closed(&p(2, 3), 0), Err(Error::ZeroLength));
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(path_count_recursive(&p(2, 3), 3).unwrap(), int(12));
        assert_eq!(path_count_recursive(&p(1, 3), 2).unwrap(), int(3));
        assert_eq!(path_count_recursive(&p(2, 3), 5).unwrap(), int(0));
        assert_eq!(path_count_recursive(&p(2, 3), 1).unwrap(), int(9));
        assert_eq!(path_count_recursive(&p(2, 3), 2).unwrap(), int(12));
    }

    #[test]
    fn recursive_matches_closed_on_grid() {
        for k in 3..=8 {
            let mut counter = RecursiveCounter::new(k).unwrap();
            for n in 1..=12 {
                let q = p(n, k);
                for ell in 1..=2 * n + 1 {
                    assert_eq!(
                        counter.count(n, ell).unwrap(),
                        path_count_closed(&q, ell).unwrap(),
                        "n={n} k={k} ell={ell}"
                    );
                }
            }
        }
    }

    #[test]
    fn table_examples() {
        let values = |n, k| -> Vec<u64> {
            path_count_table(&p(n, k))
                .iter()
                .map(|(_, c)| u64::try_from(c).unwrap())
                .collect()
        };
        assert_eq!(values(2, 3), vec![9, 12, 12, 12]);
        assert_eq!(values(1, 3), vec![3, 3]);
        assert_eq!(values(2, 2), vec![4, 3, 2, 1]);
        assert_eq!(values(3, 2), vec![6, 5, 4, 3, 2, 1]);
    }

    #[test]
    fn table_invariants() {
        for n in 1..=10 {
            for k in 2..=7 {
                let q = p(n, k);
                let t = path_count_table(&q);
                assert_eq!(t.counts().len() as u32, 2 * n);
                assert_eq!(t.get(1).unwrap(), &q.edge_count());
                assert!(t.iter().all(|(_, c)| !c.is_zero()));
                assert_eq!(t.total(), binomial(&q.vertex_count(), 2));
            }
        }
    }

    #[test]
    fn diameter_count_agrees_between_lemma_and_closed_form() {
        for n in 1..=10 {
            for k in 3..=7 {
                let q = p(n, k);
                let at_diameter = path_count_closed(&q, 2 * n).unwrap();
                assert_eq!(at_diameter, n2_leaf_paths(&q, 2 * n).unwrap());
                // (k/2)·(k−1)^(2n−1)
                assert_eq!(
                    at_diameter * 2u32,
                    ExactInt::from(k) * pow(k - 1, 2 * n - 1)
                );
                for ell in (1..=2 * n).step_by(2) {
                    assert!(n2_leaf_paths(&q, ell).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn identity_examples() {
        let r = identity_check(&p(2, 3)).unwrap();
        assert!(r.holds);
        assert_eq!(r.pairs, int(45));
        let r = identity_check(&p(1, 3)).unwrap();
        assert!(r.holds);
        assert_eq!(r.path_total, int(6));
        let r = identity_check(&p(4, 4)).unwrap();
        assert!(r.holds);
        assert_eq!(r.pairs, binomial(&int(161), 2));
    }
}
