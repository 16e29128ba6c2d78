// SPDX-License-Identifier: Apache-2.0

//! Brute-force ground truth on explicit trees.
//!
//! [`build_dendrimer`] materialises `T(n, k)` with a deterministic
//! breadth-first labeling (root `0`, then each level in order, children of
//! lower-numbered parents first). Distances are found by a breadth-first
//! traversal from every vertex, counting each unordered pair once from its
//! lower-numbered end. Traversals run in parallel and are merged by exact
//! addition, so results do not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::ToPrimitive;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::dendrimer::DendrimerParams;
use crate::error::{Error, Result};
use crate::exact_arith::ExactInt;

/// Environment variable overriding [`OracleLimits::DEFAULT_MAX_VERTICES`].
pub const MAX_VERTICES_ENV: &str = "DENDRO_MAX_VERTICES";

/// Size cap for explicitly built graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    pub max_vertices: u64,
}

impl OracleLimits {
    pub const DEFAULT_MAX_VERTICES: u64 = 10_000_000;

    pub fn new(max_vertices: u64) -> Self {
        Self { max_vertices }
    }

    /// Reads [`MAX_VERTICES_ENV`], falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        Self::from_env_value(std::env::var(MAX_VERTICES_ENV).ok().as_deref())
    }

    pub fn from_env_value(value: Option<&str>) -> Result<Self> {
        match value {
            None => Ok(Self::default()),
            Some(raw) => {
                let raw = raw.trim();
                if raw.is_empty() || !raw.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("{MAX_VERTICES_ENV} must be a decimal integer, got {raw:?}"),
                    });
                }
                raw.parse().map(Self::new).map_err(|e| Error::Parse {
                    line: 0,
                    message: format!("{MAX_VERTICES_ENV}: {e}"),
                })
            }
        }
    }

    pub fn admits(&self, p: &DendrimerParams) -> bool {
        p.vertex_count() <= ExactInt::from(self.max_vertices)
    }
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self::new(Self::DEFAULT_MAX_VERTICES)
    }
}

/// An explicit tree rooted at vertex `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeGraph {
    adjacency: Vec<Vec<u32>>,
    level: Vec<u32>,
    origin: Option<DendrimerParams>,
}

impl TreeGraph {
    /// Validates that `edges` form a spanning tree on `0..vertex_count`.
    pub fn from_edges(vertex_count: usize, edges: &[(u32, u32)]) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::InvalidTree("no vertices".into()));
        }
        if vertex_count > u32::MAX as usize {
            return Err(Error::InvalidTree(format!("{vertex_count} vertices is too many")));
        }
        let mut uf = UnionFind::new(vertex_count);
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u as usize >= vertex_count || v as usize >= vertex_count {
                return Err(Error::InvalidTree(format!(
                    "edge {u} {v} names a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidTree(format!("self-loop at vertex {u}")));
            }
            if !uf.union(u as usize, v as usize) {
                return Err(Error::InvalidTree(format!(
                    "edge {u} {v} closes a cycle"
                )));
            }
            adjacency[u as usize].push(v);
            adjacency[v as usize].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        let level = bfs_distances(&adjacency, 0);
        if let Some(lost) = level.iter().position(|&d| d == UNREACHED) {
            let component: Vec<String> = (0..vertex_count)
                .filter(|&v| uf.find(v) == uf.find(lost))
                .take(8)
                .map(|v| v.to_string())
                .collect();
            return Err(Error::InvalidTree(format!(
                "disconnected: component containing vertex {lost} ({}{}) is unreachable from root 0",
                component.join(", "),
                if uf.size(lost) > 8 { ", ..." } else { "" }
            )));
        }
        Ok(Self {
            adjacency,
            level,
            origin: None,
        })
    }

    pub(crate) fn with_origin(mut self, origin: Option<DendrimerParams>) -> Self {
        self.origin = origin;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.degree(v) == 1
    }

    /// Distance from the root.
    pub fn level(&self, v: usize) -> u32 {
        self.level[v]
    }

    /// Parameters this graph was built from, if it is a dendrimer.
    pub fn origin(&self) -> Option<&DendrimerParams> {
        self.origin.as_ref()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            for &v in nbrs {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Number of vertices of each degree.
    pub fn degree_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        for v in 0..self.vertex_count() {
            *census.entry(self.degree(v)).or_insert(0) += 1;
        }
        census
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn size(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r]
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

const UNREACHED: u32 = u32::MAX;

fn bfs_distances(adjacency: &[Vec<u32>], source: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHED; adjacency.len()];
    let mut queue = Vec::with_capacity(adjacency.len());
    bfs_into(adjacency, source, &mut dist, &mut queue);
    dist
}

fn bfs_into(adjacency: &[Vec<u32>], source: usize, dist: &mut [u32], queue: &mut Vec<u32>) {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source] = 0;
    queue.push(source as u32);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head] as usize;
        head += 1;
        let next = dist[u] + 1;
        for &w in &adjacency[u] {
            if dist[w as usize] == UNREACHED {
                dist[w as usize] = next;
                queue.push(w);
            }
        }
    }
}

/// Builds `T(n, k)` under the default [`OracleLimits`].
pub fn build_dendrimer(p: &DendrimerParams) -> Result<TreeGraph> {
    build_dendrimer_with(p, &OracleLimits::default())
}

pub fn build_dendrimer_with(p: &DendrimerParams, limits: &OracleLimits) -> Result<TreeGraph> {
    let vertices = p.vertex_count();
    if !limits.admits(p) {
        return Err(Error::TooLarge {
            n: p.n(),
            k: p.k(),
            vertices: vertices.to_string(),
            cap: limits.max_vertices,
        });
    }
    let total = vertices.to_usize().expect("capped vertex count fits usize");
    let k = p.k();
    let mut adjacency: Vec<Vec<u32>> = Vec::with_capacity(total);
    let mut level = Vec::with_capacity(total);
    adjacency.push(Vec::with_capacity(k as usize));
    level.push(0);
    let mut frontier = 0..1usize;
    for depth in 1..=p.n() {
        let start = adjacency.len();
        for parent in frontier.clone() {
            let children = if parent == 0 { k } else { k - 1 };
            for _ in 0..children {
                let child = adjacency.len() as u32;
                adjacency.push(vec![parent as u32]);
                level.push(depth);
                adjacency[parent].push(child);
            }
        }
        frontier = start..adjacency.len();
    }
    debug_assert_eq!(adjacency.len(), total);
    for nbrs in &mut adjacency {
        nbrs.sort_unstable();
    }
    Ok(TreeGraph {
        adjacency,
        level,
        origin: Some(*p),
    })
}

/// Unordered pairs at distance `length`, split by leaf endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointBreakdown {
    pub length: u32,
    pub neither_leaf: ExactInt,
    pub one_leaf: ExactInt,
    pub both_leaves: ExactInt,
}

impl EndpointBreakdown {
    pub fn total(&self) -> ExactInt {
        &self.neither_leaf + &self.one_leaf + &self.both_leaves
    }
}

/// Per-length pair counts indexed `[length][leaf endpoints]`.
#[derive(Debug, Clone, Default)]
struct PairTally {
    by_length: Vec<[u64; 3]>,
}

impl PairTally {
    fn record(&mut self, length: u32, leaves: usize) {
        let idx = length as usize;
        if self.by_length.len() <= idx {
            self.by_length.resize(idx + 1, [0; 3]);
        }
        self.by_length[idx][leaves] += 1;
    }

    fn merge(mut self, other: PairTally) -> PairTally {
        if self.by_length.len() < other.by_length.len() {
            return other.merge(self);
        }
        for (mine, theirs) in self.by_length.iter_mut().zip(other.by_length) {
            for i in 0..3 {
                mine[i] += theirs[i];
            }
        }
        self
    }
}

fn tally_pairs(g: &TreeGraph) -> PairTally {
    let v = g.vertex_count();
    (0..v)
        .into_par_iter()
        .map_init(
            || (vec![UNREACHED; v], Vec::with_capacity(v)),
            |(dist, queue), s| {
                bfs_into(&g.adjacency, s, dist, queue);
                let mut tally = PairTally::default();
                let s_leaf = g.is_leaf(s) as usize;
                for t in s + 1..v {
                    tally.record(dist[t], s_leaf + g.is_leaf(t) as usize);
                }
                tally
            },
        )
        .reduce(PairTally::default, PairTally::merge)
}

/// `histogram[ℓ]` = number of unordered vertex pairs at distance `ℓ`.
pub fn distance_histogram(g: &TreeGraph) -> BTreeMap<u32, ExactInt> {
    tally_pairs(g)
        .by_length
        .iter()
        .enumerate()
        .filter(|(_, row)| row.iter().any(|&c| c > 0))
        .map(|(l, row)| (l as u32, ExactInt::from(row.iter().sum::<u64>())))
        .collect()
}

/// Leaf-endpoint breakdown for every realised length.
pub fn endpoint_breakdowns(g: &TreeGraph) -> BTreeMap<u32, EndpointBreakdown> {
    tally_pairs(g)
        .by_length
        .iter()
        .enumerate()
        .filter(|(_, row)| row.iter().any(|&c| c > 0))
        .map(|(l, row)| {
            (
                l as u32,
                EndpointBreakdown {
                    length: l as u32,
                    neither_leaf: row[0].into(),
                    one_leaf: row[1].into(),
                    both_leaves: row[2].into(),
                },
            )
        })
        .collect()
}

pub fn endpoint_breakdown(g: &TreeGraph, length: u32) -> Result<EndpointBreakdown> {
    if length == 0 {
        return Err(Error::ZeroLength);
    }
    Ok(endpoint_breakdowns(g)
        .remove(&length)
        .unwrap_or(EndpointBreakdown {
            length,
            neither_leaf: 0u32.into(),
            one_leaf: 0u32.into(),
            both_leaves: 0u32.into(),
        }))
}

/// Sum of `d(u, v)` over unordered pairs, accumulated directly from the
/// traversals rather than from the histogram.
pub fn wiener_brute(g: &TreeGraph) -> ExactInt {
    let v = g.vertex_count();
    let total: u128 = (0..v)
        .into_par_iter()
        .map_init(
            || (vec![UNREACHED; v], Vec::with_capacity(v)),
            |(dist, queue), s| {
                bfs_into(&g.adjacency, s, dist, queue);
                dist[s + 1..].iter().map(|&d| d as u128).sum::<u128>()
            },
        )
        .sum();
    ExactInt::from(total)
}

/// One `u v` line per edge (`u < v`, ascending), preceded by a
/// `# dendrimer n=.. k=.. V=..` header for graphs built from parameters.
pub fn export_edge_list(g: &TreeGraph) -> String {
    let mut out = String::new();
    if let Some(p) = g.origin() {
        writeln!(out, "# dendrimer n={} k={} V={}", p.n(), p.k(), g.vertex_count()).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Graphviz `graph { u -- v; ... }` rendering.
pub fn export_dot(g: &TreeGraph) -> String {
    let mut out = String::from("graph {\n");
    if let Some(p) = g.origin() {
        writeln!(out, "  // dendrimer n={} k={} V={}", p.n(), p.k(), g.vertex_count()).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

/// Random recursive tree: vertex `i` attaches to a uniform earlier vertex.
pub fn random_tree<R: Rng + ?Sized>(vertices: usize, rng: &mut R) -> TreeGraph {
    assert!(vertices >= 1, "a tree needs at least one vertex");
    let edges: Vec<(u32, u32)> = (1..vertices)
        .map(|i| (rng.gen_range(0..i) as u32, i as u32))
        .collect();
    TreeGraph::from_edges(vertices, &edges).expect("uniform attachment yields a tree")
}

/// [`random_tree`] driven by a ChaCha8 stream, stable across platforms.
pub fn random_tree_seeded(vertices: usize, seed: u64) -> TreeGraph {
    random_tree(vertices, &mut ChaCha8Rng::seed_from_u64(seed))
}
