//! Exact verification by breadth-first search from every vertex.
//!
//! The searches here are written against [`Graph`] directly and share no code
//! with the construction, so they can certify its output.

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{EdgeSet, Graph, Vertex};
use crate::params::edge_bound;
use crate::spanner5::SpannerResult;

/// Default largest vertex count the oracle accepts.
pub const DEFAULT_VERIFICATION_CAP: usize = 4096;

pub const UNREACHABLE: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, above the verification cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("spanner edge ({0}, {1}) is not an edge of the input graph")]
    NotSubgraph(Vertex, Vertex),
}

fn distances_from(g: &Graph, src: Vertex, dist: &mut [u32], queue: &mut Vec<Vertex>) {
    dist.fill(UNREACHABLE);
    queue.clear();
    dist[src as usize] = 0;
    queue.push(src);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        let next = dist[u as usize] + 1;
        for &w in g.neighbors(u) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = next;
                queue.push(w);
            }
        }
    }
}

/// Row-major `n x n` hop distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `None` when `v` is unreachable from `u`.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        let d = self.dist[u as usize * self.n + v as usize];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.dist[u as usize * self.n..(u as usize + 1) * self.n]
    }
}

pub fn all_pairs_distances(g: &Graph, cap: usize) -> Result<DistanceTable, OracleError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let mut dist = vec![UNREACHABLE; n * n];
    dist.par_chunks_mut(n.max(1)).enumerate().for_each_init(Vec::new, |queue, (u, row)| {
        if u < n {
            distances_from(g, u as Vertex, row, queue);
        }
    });
    Ok(DistanceTable { n, dist })
}

/// Largest observed `dist_H - dist_G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Excess {
    Finite(u32),
    /// Some pair connected in `G` is disconnected in `H`.
    Infinite,
}

impl Serialize for Excess {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Excess::Finite(k) => s.serialize_u32(*k),
            Excess::Infinite => s.serialize_str("violated-infinite"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HistogramBin {
    pub excess: u32,
    pub pairs: u64,
}

/// Stretch statistics over unordered pairs `u < v` connected in `G`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StretchReport {
    pub max_excess: Excess,
    /// First pair, in `(u, v)` order, attaining `max_excess`.
    pub worst_pair: Option<(Vertex, Vertex)>,
    pub pairs_checked: u64,
    /// Pairs connected in `G` but not in `H`.
    pub disconnected_pairs: u64,
    pub histogram: Vec<HistogramBin>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StretchVerdict {
    pub k: u32,
    pub passed: bool,
    pub report: StretchReport,
}

#[derive(Default)]
struct RowStats {
    max: Option<(Excess, Vertex, Vertex)>,
    pairs: u64,
    disconnected: u64,
    histogram: Vec<u64>,
}

impl RowStats {
    fn record(&mut self, excess: Excess, u: Vertex, v: Vertex) {
        match excess {
            Excess::Finite(e) => {
                let e = e as usize;
                if self.histogram.len() <= e {
                    self.histogram.resize(e + 1, 0);
                }
                self.histogram[e] += 1;
            }
            Excess::Infinite => self.disconnected += 1,
        }
        self.pairs += 1;
        if self.max.map_or(true, |(m, _, _)| excess > m) {
            self.max = Some((excess, u, v));
        }
    }

    /// Rows are merged in source order, so the first strict maximum wins.
    fn merge(mut self, other: RowStats) -> RowStats {
        if let Some((e, u, v)) = other.max {
            if self.max.map_or(true, |(m, _, _)| e > m) {
                self.max = Some((e, u, v));
            }
        }
        self.pairs += other.pairs;
        self.disconnected += other.disconnected;
        if self.histogram.len() < other.histogram.len() {
            self.histogram.resize(other.histogram.len(), 0);
        }
        for (a, b) in self.histogram.iter_mut().zip(other.histogram) {
            *a += b;
        }
        self
    }
}

/// Checks `dist_H(u, v) <= dist_G(u, v) + k` for every pair connected in `G`.
pub fn verify_stretch(
    g: &Graph,
    h_edges: &EdgeSet,
    k: u32,
    cap: usize,
) -> Result<StretchVerdict, OracleError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    if let Some((u, v)) = h_edges.iter().find(|&(u, v)| !g.has_edge(u, v)) {
        return Err(OracleError::NotSubgraph(u, v));
    }
    let h = h_edges.to_graph(n).expect("subset of a valid graph");

    let rows: Vec<RowStats> = (0..n as Vertex)
        .into_par_iter()
        .map_init(
            || (vec![UNREACHABLE; n], vec![UNREACHABLE; n], Vec::new()),
            |(dg, dh, queue), u| {
                distances_from(g, u, dg, queue);
                distances_from(&h, u, dh, queue);
                let mut stats = RowStats::default();
                for v in u + 1..n as Vertex {
                    let (a, b) = (dg[v as usize], dh[v as usize]);
                    if a == UNREACHABLE {
                        continue;
                    }
                    let excess = if b == UNREACHABLE { Excess::Infinite } else { Excess::Finite(b - a) };
                    stats.record(excess, u, v);
                }
                stats
            },
        )
        .collect();
    let total = rows.into_iter().fold(RowStats::default(), RowStats::merge);

    let (max_excess, worst_pair) = match total.max {
        Some((e, u, v)) => (e, Some((u, v))),
        None => (Excess::Finite(0), None),
    };
    let report = StretchReport {
        max_excess,
        worst_pair,
        pairs_checked: total.pairs,
        disconnected_pairs: total.disconnected,
        histogram: total
            .histogram
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c > 0)
            .map(|(e, pairs)| HistogramBin { excess: e as u32, pairs })
            .collect(),
    };
    let passed = matches!(report.max_excess, Excess::Finite(e) if e <= k);
    Ok(StretchVerdict { k, passed, report })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeBudget {
    pub n: usize,
    pub m: usize,
    pub spanner_edges: usize,
    /// `n^(7/5) * max(1, log2 n)^(3/5)`.
    pub bound: f64,
    pub ratio_to_m: f64,
    pub ratio_to_bound: f64,
    pub shortcut_edges: usize,
    pub step_edge_counts: [usize; 7],
}

pub fn edge_budget_report(g: &Graph, result: &SpannerResult) -> EdgeBudget {
    let n = g.vertex_count();
    let m = g.edge_count();
    let h = result.spanner_edges.len();
    let bound = edge_bound(n);
    EdgeBudget {
        n,
        m,
        spanner_edges: h,
        bound,
        ratio_to_m: if m == 0 { 0.0 } else { h as f64 / m as f64 },
        ratio_to_bound: if bound > 0.0 { h as f64 / bound } else { 0.0 },
        shortcut_edges: result.shortcut_edges,
        step_edge_counts: result.step_edge_counts,
    }
}
