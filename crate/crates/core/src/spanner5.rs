//! Deterministic 5-additive spanner construction.
//!
//! The construction runs on a residual graph `G'` that starts as the input:
//!
//! 0. If `m <= n^(7/5)` the whole graph is returned.
//! 1. While some live vertex has degree `>= elim`, take the one of maximum
//!    degree, add a BFS tree rooted there, and delete it with its neighbors.
//! 2. Keep every live edge with a light endpoint (degree `< heavy`).
//! 3. Greedily dominate the heavy vertices with `S1`, attaching each heavy
//!    vertex outside `S1` to a dominator.
//! 4. From each root in `S1`, build the shortest-path tree minimizing the
//!    degree sum along root paths (`f` prefix sums, `s` subtree sums).
//! 5. Collect the first vertices whose prefix sum crosses `F` and whose
//!    subtree is heavy enough, along with every vertex adjacent to the path
//!    leading to them.
//! 6. Greedily dominate those path segments with `S2` and add a BFS tree from
//!    each member.
//! 7. For every ordered pair in `S1` whose tree path has `f <= 5F`, add it.
//!
//! Each step is exposed separately so it can be exercised in isolation.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bfs::{bfs_tree, degree_min_bfs_tree, BfsError, DegreeMinTree};
use crate::domination::{
    attach_heavy_edges, greedy_cover, heavy_domination_instance, CoverInstance, DominationError,
};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::params::{ParamError, SpannerParams, Thresholds};
use crate::residual::ResidualGraph;

#[derive(Debug, Error)]
pub enum SpannerError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error("|{set}| = {size} exceeds the bound {bound:.3}")]
    ClaimViolation {
        set: &'static str,
        size: usize,
        bound: f64,
    },
    #[error(transparent)]
    Domination(#[from] DominationError),
    #[error(transparent)]
    Bfs(#[from] BfsError),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

/// Statistics for the doubled graph when the result came from the
/// 4-additive reduction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DoubledSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub spanner_edge_count: usize,
}

/// Spanner edges plus the statistics of the run that produced them.
///
/// For 4-additive results the step statistics and thresholds describe the
/// inner run on the doubled graph; `vertex_count`, `edge_count` and
/// `spanner_edges` always refer to the caller's graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpannerResult {
    pub additive_stretch: u32,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub spanner_edge_count: usize,
    pub shortcut_fired: bool,
    pub shortcut_edges: usize,
    /// Edges emitted by steps 1 through 7; steps may overlap.
    pub step_edge_counts: [usize; 7],
    pub elimination_rounds: usize,
    pub s1_size: usize,
    pub s2_size: usize,
    pub aux_right_count: usize,
    pub residual_edge_count: usize,
    pub max_live_degree: u32,
    /// False only when overridden thresholds fall outside the range the
    /// stretch argument covers (see [`Thresholds::guarantees_stretch`]).
    pub stretch_guaranteed: bool,
    pub thresholds: Thresholds,
    pub doubled: Option<DoubledSummary>,
    pub spanner_edges: EdgeSet,
}

/// Wall time per phase, in execution order. Kept out of [`SpannerResult`] so
/// results stay byte-reproducible.
#[derive(Debug, Clone, Default)]
pub struct PhaseTimings {
    pub phases: Vec<(&'static str, Duration)>,
}

impl PhaseTimings {
    fn time<T>(&mut self, name: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.phases.push((name, start.elapsed()));
        out
    }

    pub fn get(&self, name: &str) -> Duration {
        self.phases
            .iter()
            .filter(|(n, _)| *n == name)
            .map(|(_, d)| *d)
            .sum()
    }

    pub fn total(&self) -> Duration {
        self.phases.iter().map(|(_, d)| *d).sum()
    }
}

/// Returns every edge when the dense shortcut applies.
pub fn step0_dense_shortcut(g: &Graph, th: &Thresholds) -> Option<EdgeSet> {
    (th.dense_shortcut && g.edge_count() as f64 <= th.shortcut_edge_limit).then(|| g.edge_set())
}

#[derive(Debug, Clone)]
pub struct Elimination<'g> {
    pub residual: ResidualGraph<'g>,
    pub edges: EdgeSet,
    /// Roots in elimination order.
    pub roots: Vec<Vertex>,
}

pub fn step1_eliminate<'g>(g: &'g Graph, th: &Thresholds) -> Elimination<'g> {
    let mut rg = ResidualGraph::new(g);
    let mut pairs = Vec::new();
    let mut roots = Vec::new();
    while let Some((v, d)) = rg.max_degree_vertex() {
        if (d as f64) < th.elim {
            break;
        }
        let tree = bfs_tree(&rg, v).expect("maximum-degree vertex is live");
        pairs.extend(tree.edges().iter());
        let doomed: Vec<Vertex> = rg.live_neighbors(v).collect();
        rg.remove_vertex(v);
        for w in doomed {
            rg.remove_vertex(w);
        }
        roots.push(v);
    }
    Elimination {
        residual: rg,
        edges: EdgeSet::from_pairs(pairs),
        roots,
    }
}

/// Live edges with at least one endpoint of live degree `< heavy`.
pub fn step2_light_edges(rg: &ResidualGraph<'_>, th: &Thresholds) -> EdgeSet {
    let light = |v: Vertex| (rg.live_degree(v) as f64) < th.heavy;
    EdgeSet::from_pairs(rg.live_edges().filter(|&(u, v)| light(u) || light(v)))
}

/// Dominating set of the heavy vertices plus one attaching edge per
/// undominated-by-itself heavy vertex. Checks `|S1|` against its bound.
pub fn step3_dominate_heavy(
    rg: &ResidualGraph<'_>,
    th: &Thresholds,
) -> Result<(Vec<Vertex>, EdgeSet), SpannerError> {
    let heavy = heavy_domination_instance(rg, th.heavy);
    let s1: Vec<Vertex> = greedy_cover(&heavy.instance)?
        .into_iter()
        .map(|c| c as Vertex)
        .collect();
    if s1.len() as f64 > th.s1_bound {
        return Err(SpannerError::ClaimViolation {
            set: "S1",
            size: s1.len(),
            bound: th.s1_bound,
        });
    }
    let edges = attach_heavy_edges(&s1, rg, &heavy.heavy)?;
    Ok((s1, edges))
}

/// One degree-minimizing tree per root, in `s1` order. Trees are built in
/// parallel; the output order does not depend on scheduling.
pub fn step4_trees(
    rg: &ResidualGraph<'_>,
    s1: &[Vertex],
) -> Result<Vec<DegreeMinTree>, SpannerError> {
    let deg = rg.live_degrees();
    s1.par_iter()
        .map(|&v| degree_min_bfs_tree(rg, v, deg).map_err(SpannerError::from))
        .collect()
}

/// Auxiliary bipartite instance: left side is every live vertex, right side
/// the qualifying `(root, u)` tree-path segments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuxBipartite {
    pub left: Vec<Vertex>,
    pub right: Vec<(Vertex, Vertex)>,
    /// Per right element, the sorted live vertices on or adjacent to its path.
    pub edges: Vec<Vec<Vertex>>,
    /// Per right element, the tree path from the root to `u`.
    pub right_paths: Vec<Vec<Vertex>>,
}

impl AuxBipartite {
    /// Cover instance whose candidates are vertex ids and whose targets are
    /// right elements.
    pub fn cover_instance(&self, vertex_count: usize) -> CoverInstance {
        let mut coverage = vec![Vec::new(); vertex_count];
        for (r, xs) in self.edges.iter().enumerate() {
            for &x in xs {
                coverage[x as usize].push(r as u32);
            }
        }
        CoverInstance::new(self.right.len(), coverage)
    }
}

/// A vertex `u` qualifies in `T_v` when its prefix sum is the first on its
/// branch to exceed `F` and its subtree sum exceeds `subtree_factor * F`.
/// The root counts with an empty prefix, so it qualifies on its own when its
/// degree already exceeds `F`; that never happens under default thresholds.
pub fn step5_build_aux(
    rg: &ResidualGraph<'_>,
    trees: &[DegreeMinTree],
    th: &Thresholds,
) -> AuxBipartite {
    let big_f = th.f;
    let sub = th.subtree_limit();
    let mut aux = AuxBipartite {
        left: rg.live_vertices().collect(),
        ..Default::default()
    };
    let mut stamp = vec![usize::MAX; rg.vertex_count()];

    for tree in trees {
        let mut hits: Vec<Vertex> = tree
            .order()
            .iter()
            .copied()
            .filter(|&u| {
                let i = u as usize;
                let prefix = if u == tree.root { 0 } else { tree.f[tree.parent[i] as usize] };
                tree.f[i] as f64 > big_f && prefix as f64 <= big_f && tree.s[i] as f64 > sub
            })
            .collect();
        hits.sort_unstable();
        for u in hits {
            let r = aux.right.len();
            let path = tree.path_to(u).expect("hit is reachable");
            let mut adjacent = Vec::new();
            for &p in &path {
                for x in std::iter::once(p).chain(rg.live_neighbors(p)) {
                    if stamp[x as usize] != r {
                        stamp[x as usize] = r;
                        adjacent.push(x);
                    }
                }
            }
            adjacent.sort_unstable();
            aux.right.push((tree.root, u));
            aux.edges.push(adjacent);
            aux.right_paths.push(path);
        }
    }
    aux
}

/// Dominating set of the auxiliary right side, plus a BFS tree from each
/// member. Checks `|S2|` against its bound.
pub fn step6_dominate_paths(
    rg: &ResidualGraph<'_>,
    aux: &AuxBipartite,
    th: &Thresholds,
) -> Result<(Vec<Vertex>, EdgeSet), SpannerError> {
    let inst = aux.cover_instance(rg.vertex_count());
    let s2: Vec<Vertex> = greedy_cover(&inst)
        .map_err(|e| SpannerError::Invariant(format!("auxiliary instance infeasible: {e}")))?
        .into_iter()
        .map(|c| c as Vertex)
        .collect();
    if s2.len() as f64 > th.s2_bound {
        return Err(SpannerError::ClaimViolation {
            set: "S2",
            size: s2.len(),
            bound: th.s2_bound,
        });
    }
    let trees: Vec<EdgeSet> = s2
        .par_iter()
        .map(|&x| bfs_tree(rg, x).map(|t| t.edges()))
        .collect::<Result<_, _>>()?;
    let edges = EdgeSet::from_pairs(trees.iter().flat_map(|t| t.iter()));
    Ok((s2, edges))
}

/// Tree paths `T_v: v -> u` for ordered pairs in `s1` with
/// `f_{v,u} <= shortpath_factor * F`. `trees[i]` must be rooted at `s1[i]`.
pub fn step7_short_paths(trees: &[DegreeMinTree], s1: &[Vertex], th: &Thresholds) -> EdgeSet {
    let limit = th.shortpath_limit();
    let mut pairs = Vec::new();
    for tree in trees {
        for &u in s1 {
            if u == tree.root {
                continue;
            }
            let Some(f) = tree.f_of(u) else { continue };
            if f as f64 > limit {
                continue;
            }
            let mut x = u;
            while x != tree.root {
                let p = tree.parent[x as usize];
                pairs.push((p, x));
                x = p;
            }
        }
    }
    EdgeSet::from_pairs(pairs)
}

pub fn build_5_spanner(g: &Graph, params: &SpannerParams) -> Result<SpannerResult, SpannerError> {
    build_5_spanner_timed(g, params).map(|(r, _)| r)
}

pub fn build_5_spanner_timed(
    g: &Graph,
    params: &SpannerParams,
) -> Result<(SpannerResult, PhaseTimings), SpannerError> {
    let th = params.resolve(g.vertex_count())?;
    build_with_thresholds(g, th)
}

pub(crate) fn build_with_thresholds(
    g: &Graph,
    th: Thresholds,
) -> Result<(SpannerResult, PhaseTimings), SpannerError> {
    let mut timings = PhaseTimings::default();
    let mut result = SpannerResult {
        additive_stretch: 5,
        vertex_count: g.vertex_count(),
        edge_count: g.edge_count(),
        spanner_edge_count: 0,
        shortcut_fired: false,
        shortcut_edges: 0,
        step_edge_counts: [0; 7],
        elimination_rounds: 0,
        s1_size: 0,
        s2_size: 0,
        aux_right_count: 0,
        residual_edge_count: 0,
        max_live_degree: 0,
        stretch_guaranteed: true,
        thresholds: th.clone(),
        doubled: None,
        spanner_edges: EdgeSet::new(),
    };

    if let Some(all) = timings.time("step0", || step0_dense_shortcut(g, &th)) {
        result.shortcut_fired = true;
        result.shortcut_edges = all.len();
        result.spanner_edge_count = all.len();
        result.spanner_edges = all;
        return Ok((result, timings));
    }

    let elim = timings.time("step1", || step1_eliminate(g, &th));
    let rg = &elim.residual;
    let max_live = rg.max_live_degree();
    if max_live as f64 >= th.elim {
        return Err(SpannerError::Invariant(format!(
            "live degree {max_live} survived elimination at threshold {}",
            th.elim
        )));
    }
    result.elimination_rounds = elim.roots.len();
    result.residual_edge_count = rg.live_edge_count();
    result.max_live_degree = max_live;
    result.stretch_guaranteed = th.guarantees_stretch(max_live);

    let light = timings.time("step2", || step2_light_edges(rg, &th));
    let (s1, attach) = timings.time("step3", || step3_dominate_heavy(rg, &th))?;
    let trees = timings.time("step4", || step4_trees(rg, &s1))?;
    let aux = timings.time("step5", || step5_build_aux(rg, &trees, &th));
    let (s2, dominator_trees) = timings.time("step6", || step6_dominate_paths(rg, &aux, &th))?;
    let short = timings.time("step7", || step7_short_paths(&trees, &s1, &th));

    let parts = [&elim.edges, &light, &attach, &EdgeSet::new(), &EdgeSet::new(), &dominator_trees, &short];
    for (slot, part) in result.step_edge_counts.iter_mut().zip(parts) {
        *slot = part.len();
    }
    result.s1_size = s1.len();
    result.s2_size = s2.len();
    result.aux_right_count = aux.right.len();
    result.spanner_edges = EdgeSet::from_pairs(parts.iter().flat_map(|p| p.iter()));
    result.spanner_edge_count = result.spanner_edges.len();
    Ok((result, timings))
}
