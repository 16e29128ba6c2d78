// SPDX-License-Identifier: Apache-2.0

//! Exact integers, reduced fractions and the few combinatorial helpers the
//! path formulas need.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer used for every count and index.
pub type ExactInt = BigUint;

/// `C(n, r)`; zero when `n < r`.
pub fn binomial(n: &ExactInt, r: u32) -> ExactInt {
    let r_big = ExactInt::from(r);
    if *n < r_big {
        return ExactInt::zero();
    }
    // Running product stays integral: after step i it equals C(n - r + i, i).
    let base = n - &r_big;
    let mut acc = ExactInt::one();
    for i in 1..=r {
        acc *= &base + ExactInt::from(i);
        acc /= ExactInt::from(i);
    }
    acc
}

/// `a + a·r + … + a·r^(terms−1)`, evaluated through the closed form
/// `a·(r^terms − 1)/(r − 1)`.
pub fn geometric_sum(a: &ExactInt, r: &ExactInt, terms: u32) -> Result<ExactInt> {
    if *r <= ExactInt::one() {
        return Err(Error::InvalidRatio(r.to_string()));
    }
    if terms == 0 {
        return Ok(ExactInt::zero());
    }
    let numerator = a * (Pow::pow(r, terms) - ExactInt::one());
    exact_div(&numerator, &(r - ExactInt::one()))
}

/// `a / b`, failing unless `b` divides `a`.
pub fn exact_div(a: &ExactInt, b: &ExactInt) -> Result<ExactInt> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (q, rem) = a.div_rem(b);
    if !rem.is_zero() {
        return Err(Error::InexactDivision {
            dividend: a.to_string(),
            divisor: b.to_string(),
        });
    }
    Ok(q)
}

/// `base^exp` for a small base.
pub(crate) fn pow(base: u32, exp: u32) -> ExactInt {
    Pow::pow(ExactInt::from(base), exp)
}

/// A nonnegative fraction kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactRatio {
    numer: ExactInt,
    denom: ExactInt,
}

impl ExactRatio {
    pub fn new(numer: ExactInt, denom: ExactInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = numer.gcd(&denom);
        if g.is_zero() || g.is_one() {
            return Ok(Self { numer, denom });
        }
        Ok(Self {
            numer: numer / &g,
            denom: denom / &g,
        })
    }

    pub fn from_integer(value: ExactInt) -> Self {
        Self {
            numer: value,
            denom: ExactInt::one(),
        }
    }

    pub fn numer(&self) -> &ExactInt {
        &self.numer
    }

    pub fn denom(&self) -> &ExactInt {
        &self.denom
    }

    pub fn is_one(&self) -> bool {
        self.numer == self.denom
    }

    /// `self · m`, exact.
    pub fn mul_int(&self, m: &ExactInt) -> ExactRatio {
        // Denominator stays nonzero, so `new` cannot fail.
        ExactRatio::new(&self.numer * m, self.denom.clone()).expect("nonzero denominator")
    }
}

impl PartialOrd for ExactRatio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRatio {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numer * &other.denom).cmp(&(&other.numer * &self.denom))
    }
}

impl fmt::Display for ExactRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer, self.denom)
    }
}
