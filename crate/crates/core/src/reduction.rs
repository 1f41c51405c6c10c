//! 4-additive spanners through the bipartite double cover.
//!
//! Every vertex `u` gets a left copy `u` and a right copy `u + n`; each edge
//! `(u, v)` becomes `(u, v + n)` and `(v, u + n)`. In the doubled graph every
//! path between two left copies has even length and every left-to-right path
//! odd length, so an additive-5 guarantee there rounds down to additive 4 once
//! spanner edges are projected back. The same argument turns any odd
//! `2k + 1` guarantee into `2k`; only `k = 2` is wired up here.

use thiserror::Error;

use crate::graph::{canonical, EdgeSet, Graph, Vertex};
use crate::params::SpannerParams;
use crate::spanner5::{build_with_thresholds, DoubledSummary, PhaseTimings, SpannerError, SpannerResult};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("edge ({0}, {1}) does not cross the bipartition")]
    SamePart(Vertex, Vertex),
    #[error("edge ({0}, {1}) joins the two copies of one vertex")]
    CopyEdge(Vertex, Vertex),
    #[error("edge ({0}, {1}) is outside the doubled vertex range")]
    OutOfRange(Vertex, Vertex),
}

/// Doubled graph on `2n` vertices: left copies `[0, n)`, right `[n, 2n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubledGraph {
    pub graph: Graph,
    pub source_vertex_count: usize,
}

impl DoubledGraph {
    pub fn left(&self, u: Vertex) -> Vertex {
        u
    }

    pub fn right(&self, u: Vertex) -> Vertex {
        u + self.source_vertex_count as Vertex
    }

    pub fn is_left(&self, x: Vertex) -> bool {
        (x as usize) < self.source_vertex_count
    }
}

pub fn double(g: &Graph) -> DoubledGraph {
    let n = g.vertex_count() as Vertex;
    let edges = g.edges().flat_map(|(u, v)| [(u, v + n), (v, u + n)]);
    DoubledGraph {
        graph: Graph::from_edges(2 * g.vertex_count(), edges).expect("doubled ids stay in range"),
        source_vertex_count: g.vertex_count(),
    }
}

/// Maps doubled-graph edges back to the source graph: `(u, v)` is kept when
/// `(u, v + n)` or `(v, u + n)` is present.
pub fn project(h0: &EdgeSet, n: usize) -> Result<EdgeSet, ReductionError> {
    let n32 = n as Vertex;
    let mut out = Vec::with_capacity(h0.len());
    for (a, b) in h0.iter() {
        // canonical: a < b, so a is the left copy whenever the edge crosses.
        if b as usize >= 2 * n {
            return Err(ReductionError::OutOfRange(a, b));
        }
        if a >= n32 || b < n32 {
            return Err(ReductionError::SamePart(a, b));
        }
        if b - n32 == a {
            return Err(ReductionError::CopyEdge(a, b));
        }
        out.push(canonical(a, b - n32));
    }
    Ok(EdgeSet::from_pairs(out))
}

pub fn build_4_spanner(g: &Graph, params: &SpannerParams) -> Result<SpannerResult, SpannerError> {
    build_4_spanner_timed(g, params).map(|(r, _)| r)
}

/// Runs the 5-additive construction on the doubled graph (thresholds derived
/// from `2n`) and projects the result.
pub fn build_4_spanner_timed(
    g: &Graph,
    params: &SpannerParams,
) -> Result<(SpannerResult, PhaseTimings), SpannerError> {
    let start = std::time::Instant::now();
    let doubled = double(g);
    let double_time = start.elapsed();

    let th = params.resolve(doubled.graph.vertex_count())?;
    let (inner, mut timings) = build_with_thresholds(&doubled.graph, th)?;
    timings.phases.insert(0, ("double", double_time));

    let start = std::time::Instant::now();
    let projected = project(&inner.spanner_edges, g.vertex_count())
        .map_err(|e| SpannerError::Invariant(format!("projection failed: {e}")))?;
    timings.phases.push(("project", start.elapsed()));

    let summary = DoubledSummary {
        vertex_count: inner.vertex_count,
        edge_count: inner.edge_count,
        spanner_edge_count: inner.spanner_edge_count,
    };
    Ok((
        SpannerResult {
            additive_stretch: 4,
            vertex_count: g.vertex_count(),
            edge_count: g.edge_count(),
            spanner_edge_count: projected.len(),
            doubled: Some(summary),
            spanner_edges: projected,
            ..inner
        },
        timings,
    ))
}
