//! Seeded graph generators for test corpora and benchmarks.
//!
//! The random stream is ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded through
//! `SeedableRng::seed_from_u64`. Both are value-stable across platforms, and
//! the generator identity is part of the output contract: a given
//! `(n, m, seed)` always yields the same edge list.

use std::collections::HashSet;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::graph::{Graph, GraphError, Vertex};

fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Uniform draw from `0..=max` by rejection on the raw 64-bit stream.
fn uniform_inclusive(rng: &mut ChaCha8Rng, max: u64) -> u64 {
    if max == u64::MAX {
        return rng.next_u64();
    }
    let range = max + 1;
    let limit = u64::MAX - u64::MAX % range;
    loop {
        let x = rng.next_u64();
        if x < limit {
            return x % range;
        }
    }
}

/// Index `k` of the pair `(u, v)`, `u < v`, enumerated by `v` then `u`:
/// `k = v(v-1)/2 + u`.
fn decode_pair(k: u64) -> (Vertex, Vertex) {
    let mut v = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while v * (v - 1) / 2 > k {
        v -= 1;
    }
    while (v + 1) * v / 2 <= k {
        v += 1;
    }
    let u = k - v * (v - 1) / 2;
    (u as Vertex, v as Vertex)
}

/// Uniform simple graph on `n` vertices with exactly `m` edges.
///
/// Edges are drawn as an `m`-subset of the `n(n-1)/2` pair indices with
/// Floyd's sampling algorithm, so exactly `m` draws are made regardless of
/// density.
pub fn generate_gnm(n: usize, m: u64, seed: u64) -> Result<Graph, GraphError> {
    let total = pair_count(n);
    if m > total {
        return Err(GraphError::Capacity { n, m, max: total });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chosen: HashSet<u64> = HashSet::with_capacity(m as usize);
    for j in (total - m)..total {
        let t = uniform_inclusive(&mut rng, j);
        if !chosen.insert(t) {
            chosen.insert(j);
        }
    }
    Graph::from_edges(n, chosen.into_iter().map(decode_pair))
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as Vertex).map(|v| (v - 1, v))).expect("in range")
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let edges = (0..n as Vertex).map(|v| (v, (v + 1) % n as Vertex));
    Graph::from_edges(n, edges).expect("in range")
}

/// Star with center 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves as Vertex).map(|v| (0, v))).expect("in range")
}

pub fn complete(n: usize) -> Graph {
    let n32 = n as Vertex;
    Graph::from_edges(n, (0..n32).flat_map(|u| (u + 1..n32).map(move |v| (u, v))))
        .expect("in range")
}

/// `rows x cols` grid, vertex `r * cols + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| (r * cols + c) as Vertex;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(rows * cols, edges).expect("in range")
}

/// Disjoint union; vertices of later graphs are shifted past earlier ones.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut offset: Vertex = 0;
    let mut edges = Vec::new();
    for g in parts {
        edges.extend(g.edges().map(|(u, v)| (u + offset, v + offset)));
        offset += g.vertex_count() as Vertex;
    }
    Graph::from_edges(offset as usize, edges).expect("in range")
}
