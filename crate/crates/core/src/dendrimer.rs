// SPDX-License-Identifier: Apache-2.0

//! Dendrimer parameters and vertex/edge census.

use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_arith::{exact_div, pow, ExactInt};

/// The pair `(n, k)` naming the dendrimer `T(n, k)`: radius `n >= 1`, every
/// non-leaf vertex of degree `k >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DendrimerParams {
    n: u32,
    k: u32,
}

impl DendrimerParams {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if n < 1 || k < 2 {
            return Err(Error::InvalidParams { n, k });
        }
        Ok(Self { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `T(n, 2)` is a path on `2n + 1` vertices.
    pub fn is_path(&self) -> bool {
        self.k == 2
    }

    /// Diameter `2n`.
    pub fn diameter(&self) -> u32 {
        2 * self.n
    }

    /// `k(k−1)^(n−1)`.
    pub fn leaf_count(&self) -> ExactInt {
        ExactInt::from(self.k) * pow(self.k - 1, self.n - 1)
    }

    /// `k[(k−1)^n − 1]/(k−2)`, or `2n` on the path.
    pub fn edge_count(&self) -> ExactInt {
        if self.is_path() {
            return ExactInt::from(2 * self.n);
        }
        let numer = ExactInt::from(self.k) * (pow(self.k - 1, self.n) - ExactInt::one());
        exact_div(&numer, &ExactInt::from(self.k - 2)).expect("edge count divides exactly")
    }

    /// `1 + k[(k−1)^n − 1]/(k−2)`, or `2n + 1` on the path.
    pub fn vertex_count(&self) -> ExactInt {
        self.edge_count() + ExactInt::one()
    }

    /// Number of degree-`k` vertices: `(k(k−1)^(n−1) − 2)/(k−2)`, or the
    /// `2n − 1` interior vertices of the path.
    pub fn internal_vertex_count(&self) -> ExactInt {
        if self.is_path() {
            return ExactInt::from(2 * self.n - 1);
        }
        let numer = self.leaf_count() - ExactInt::from(2u32);
        exact_div(&numer, &ExactInt::from(self.k - 2)).expect("internal count divides exactly")
    }

    /// Vertices at distance `level` from the root (zero past the leaves).
    pub fn level_size(&self, level: u32) -> ExactInt {
        match level {
            0 => ExactInt::one(),
            l if l > self.n => ExactInt::from(0u32),
            l => ExactInt::from(self.k) * pow(self.k - 1, l - 1),
        }
    }
}

impl fmt::Display for DendrimerParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.n, self.k)
    }
}
