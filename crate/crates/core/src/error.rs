// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid dendrimer parameters n={n}, k={k}: need n >= 1 and k >= 2")]
    InvalidParams { n: u32, k: u32 },

    #[error("path length must be at least 1")]
    ZeroLength,

    #[error("{what} is only defined for k >= 3 (got k = {k})")]
    RequiresBranching { what: &'static str, k: u32 },

    #[error("geometric ratio must be at least 2 (got {0})")]
    InvalidRatio(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("{dividend} is not divisible by {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("sigma = {sigma} is outside [2, {diameter}]")]
    SigmaOutOfRange { sigma: u32, diameter: u32 },

    #[error("T({n},{k}) has {vertices} vertices, above the oracle cap of {cap} (set DENDRO_MAX_VERTICES to raise it)")]
    TooLarge {
        n: u32,
        k: u32,
        vertices: String,
        cap: u64,
    },

    #[error("invalid sweep bounds: {0}")]
    InvalidBounds(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("malformed report: {0}")]
    Report(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
