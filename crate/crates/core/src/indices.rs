// SPDX-License-Identifier: Apache-2.0

//! Distance-based indices derived from path counts.

use std::collections::BTreeMap;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};

use crate::dendrimer::DendrimerParams;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, exact_div, pow, ExactInt, ExactRatio};
use crate::paths::{path_count_closed, path_count_table, PathLengthTable};

/// `Σ ℓ·count[ℓ]`. In any tree this is the total distance over all pairs.
pub fn total_distance_from_counts(counts: &BTreeMap<u32, ExactInt>) -> ExactInt {
    counts.iter().map(|(len, c)| c * *len).sum()
}

/// Wiener index of `T(n, k)` for `k >= 3` in closed form:
///
/// `[(k−1)^(2n)·(nk³ − 2(n+1)k² + k) + 2k²(k−1)^n − k] / (k−2)³`
///
/// The polynomial factor is negative for small `n` (it is −6 at `(1, 3)`), so
/// the numerator is assembled in signed arithmetic.
pub fn wiener_closed(p: &DendrimerParams) -> Result<ExactInt> {
    if p.is_path() {
        return Err(Error::RequiresBranching {
            what: "closed-form Wiener index",
            k: p.k(),
        });
    }
    let (n, k) = (BigInt::from(p.n()), BigInt::from(p.k()));
    let signed = |v: ExactInt| BigInt::from_biguint(Sign::Plus, v);
    let poly = &n * &k * &k * &k - BigInt::from(2) * (&n + 1) * &k * &k + &k;
    let numer: BigInt = signed(pow(p.k() - 1, 2 * p.n())) * poly
        + BigInt::from(2) * &k * &k * signed(pow(p.k() - 1, p.n()))
        - &k;
    if numer.is_negative() {
        return Err(Error::Inconsistent(format!(
            "closed-form Wiener numerator is negative for {p}"
        )));
    }
    let denom = pow(p.k() - 2, 3);
    exact_div(&numer.magnitude().clone(), &denom)
}

/// Wiener index as `Σ ℓ·n_ℓ` over the path-count table (any `k >= 2`).
pub fn wiener_from_counts(p: &DendrimerParams) -> ExactInt {
    total_distance_from_counts(path_count_table(p).counts())
}

/// `W / C(|V|, 2)` in lowest terms.
pub fn average_distance(p: &DendrimerParams) -> ExactRatio {
    let pairs = binomial(&p.vertex_count(), 2);
    ExactRatio::new(wiener_from_counts(p), pairs).expect("T(n,k) has at least 3 vertices")
}

fn check_sigma(p: &DendrimerParams, sigma: u32) -> Result<()> {
    if sigma < 2 || sigma > p.diameter() {
        return Err(Error::SigmaOutOfRange {
            sigma,
            diameter: p.diameter(),
        });
    }
    Ok(())
}

/// Number of paths of length at most `sigma`, by direct summation.
pub fn sigma_sum(p: &DendrimerParams, sigma: u32) -> Result<ExactInt> {
    check_sigma(p, sigma)?;
    (1..=sigma).map(|ell| path_count_closed(p, ell)).sum()
}

/// Number of paths of length at most `sigma` via the two-sum form: odd
/// lengths `2j+1` for `j = 0..=s` and even lengths `2j` for `j = 1..=⌊σ/2⌋`,
/// where `s = ⌊σ/2⌋` for odd `σ` and `⌊σ/2⌋ − 1` for even `σ`.
pub fn sigma_sum_closed(p: &DendrimerParams, sigma: u32) -> Result<ExactInt> {
    check_sigma(p, sigma)?;
    if p.is_path() {
        return Err(Error::RequiresBranching {
            what: "closed-form sigma sum",
            k: p.k(),
        });
    }
    let (n, k) = (p.n(), p.k());
    let k_big = ExactInt::from(k);
    let km2 = ExactInt::from(k - 2);
    let half = sigma / 2;
    let s = if sigma % 2 == 1 { half } else { half - 1 };

    let mut total = ExactInt::zero();
    for j in 0..=s {
        // k(k−1)^j · [(k−1)^n − (k−1)^j]/(k−2)
        let bracket = exact_div(&(pow(k - 1, n) - pow(k - 1, j)), &km2)?;
        total += &k_big * pow(k - 1, j) * bracket;
    }
    for j in 1..=half {
        // k(k−1)^(2j−1)/2 · [k(k−1)^(n−j) − 2]/(k−2)
        let bracket = exact_div(&(&k_big * pow(k - 1, n - j) - 2u32), &km2)?;
        total += exact_div(&(&k_big * pow(k - 1, 2 * j - 1) * bracket), &2u32.into())?;
    }
    Ok(total)
}

/// `ς(T) / C(|V|, 2)` with `ς(T)` from [`sigma_sum`].
pub fn medium_domination(p: &DendrimerParams, sigma: u32) -> Result<ExactRatio> {
    let pairs = binomial(&p.vertex_count(), 2);
    ExactRatio::new(sigma_sum(p, sigma)?, pairs)
}

/// Like [`medium_domination`], but also evaluates the two-sum form (when
/// `k >= 3`) and fails if the two disagree.
pub fn medium_domination_verified(p: &DendrimerParams, sigma: u32) -> Result<ExactRatio> {
    let direct = sigma_sum(p, sigma)?;
    if !p.is_path() {
        let closed = sigma_sum_closed(p, sigma)?;
        if closed != direct {
            return Err(Error::Inconsistent(format!(
                "sigma sum for {p} at sigma={sigma}: direct {direct}, closed {closed}"
            )));
        }
    }
    ExactRatio::new(direct, binomial(&p.vertex_count(), 2))
}

/// Everything derivable from the path-count table of one dendrimer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexReport {
    pub params: DendrimerParams,
    pub vertices: ExactInt,
    pub edges: ExactInt,
    pub leaves: ExactInt,
    pub table: PathLengthTable,
    pub wiener: ExactInt,
    pub average_distance: ExactRatio,
    /// `(σ, γ_σ)` ascending in `σ`.
    pub medium_domination: Vec<(u32, ExactRatio)>,
}

/// Assembles an [`IndexReport`]; `sigmas` are sorted and deduplicated.
pub fn build_report(p: &DendrimerParams, sigmas: &[u32]) -> Result<IndexReport> {
    let mut sigmas = sigmas.to_vec();
    sigmas.sort_unstable();
    sigmas.dedup();
    let medium_domination = sigmas
        .into_iter()
        .map(|s| medium_domination_verified(p, s).map(|g| (s, g)))
        .collect::<Result<Vec<_>>>()?;

    let table = path_count_table(p);
    let wiener = total_distance_from_counts(table.counts());
    let vertices = p.vertex_count();
    let average_distance = ExactRatio::new(wiener.clone(), binomial(&vertices, 2))?;
    Ok(IndexReport {
        params: *p,
        edges: p.edge_count(),
        leaves: p.leaf_count(),
        vertices,
        table,
        wiener,
        average_distance,
        medium_domination,
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

    fn ratio(a: u64, b: u64) -> ExactRatio {
        ExactRatio::new(int(a), int(b)).unwrap()
    }

    #[test]
    fn total_distance_examples() {
        let t = |pairs: &[(u32, u64)]| {
            total_distance_from_counts(&pairs.iter().map(|&(l, c)| (l, int(c))).collect())
        };
        assert_eq!(t(&[(1, 3), (2, 3)]), int(9));
        assert_eq!(t(&[(1, 1)]), int(1));
        assert_eq!(t(&[(1, 9), (2, 12), (3, 12), (4, 12)]), int(117));
        assert_eq!(t(&[]), int(0));
    }

    #[test]
    fn wiener_examples() {
        assert_eq!(wiener_closed(&p(1, 3)).unwrap(), int(9));
        assert_eq!(wiener_closed(&p(2, 3)).unwrap(), int(117));
        assert_eq!(wiener_closed(&p(3, 4)).unwrap(), wiener_from_counts(&p(3, 4)));
        assert_eq!(wiener_from_counts(&p(2, 3)), int(117));
        assert_eq!(wiener_from_counts(&p(3, 2)), int(56));
        assert_eq!(wiener_from_counts(&p(1, 3)), int(9));
        assert!(matches!(
            wiener_closed(&p(3, 2)),
            Err(Error::RequiresBranching { k: 2, .. })
        ));
    }

    #[test]
    fn wiener_on_paths_is_tetrahedral() {
        // Σ_{ℓ=1}^{2n} ℓ(2n+1−ℓ) = C(2n+2, 3)
        for n in 1..=30u32 {
            assert_eq!(
                wiener_from_counts(&p(n, 2)),
                binomial(&int(2 * n as u64 + 2), 3)
            );
        }
    }

    #[test]
    fn wiener_closed_matches_counts_on_grid() {
        for n in 1..=12 {
            for k in 3..=8 {
                assert_eq!(wiener_closed(&p(n, k)).unwrap(), wiener_from_counts(&p(n, k)));
            }
        }
    }

    #[test]
    fn average_distance_examples() {
        assert_eq!(average_distance(&p(1, 3)), ratio(3, 2));
        assert_eq!(average_distance(&p(2, 3)), ratio(13, 5));
        assert_eq!(average_distance(&p(1, 2)), ratio(4, 3));
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_sum(&p(2, 3), 2).unwrap(), int(21));
        assert_eq!(sigma_sum(&p(2, 3), 4).unwrap(), int(45));
        assert_eq!(sigma_sum(&p(1, 3), 2).unwrap(), int(6));
        assert_eq!(medium_domination(&p(2, 3), 2).unwrap(), ratio(7, 15));
        assert!(medium_domination(&p(2, 3), 4).unwrap().is_one());
        assert!(medium_domination(&p(1, 3), 2).unwrap().is_one());
    }

    #[test]
    fn sigma_out_of_range() {
        for bad in [0, 1, 5, 9] {
            assert_eq!(
                sigma_sum(&p(2, 3), bad),
                Err(Error::SigmaOutOfRange { sigma: bad, diameter: 4 })
            );
            assert!(sigma_sum_closed(&p(2, 3), bad).is_err());
            assert!(medium_domination(&p(2, 3), bad).is_err());
        }
    }

    #[test]
    fn sigma_closed_matches_direct() {
        for n in 1..=10 {
            for k in 3..=6 {
                let q = p(n, k);
                for s in 2..=2 * n {
                    assert_eq!(
                        sigma_sum_closed(&q, s).unwrap(),
                        sigma_sum(&q, s).unwrap(),
                        "{q} sigma={s}"
                    );
                }
            }
        }
    }

    #[test]
    fn report_assembly() {
        let r = build_report(&p(2, 3), &[4, 2, 2]).unwrap();
        assert_eq!(r.vertices, int(10));
        assert_eq!(r.edges, int(9));
        assert_eq!(r.leaves, int(6));
        assert_eq!(r.wiener, int(117));
        assert_eq!(r.average_distance, ratio(13, 5));
        assert_eq!(
            r.medium_domination,
            vec![(2, ratio(7, 15)), (4, ExactRatio::from_integer(int(1)))]
        );
        assert_eq!(r.average_distance.mul_int(&binomial(&r.vertices, 2)), ExactRatio::from_integer(r.wiener.clone()));
        assert!(build_report(&p(2, 3), &[9]).is_err());
        assert!(build_report(&p(3, 2), &[2, 6]).unwrap().medium_domination[1].1.is_one());
    }
}
