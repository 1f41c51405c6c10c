#![allow(dead_code)]

use std::collections::VecDeque;

use additive_spanner::generate::{complete, cycle, disjoint_union, grid, path, star};
use additive_spanner::{generate_gnm, Graph, SpannerParams, Vertex};

pub struct Named {
    pub name: String,
    pub graph: Graph,
}

fn named(name: impl Into<String>, graph: Graph) -> Named {
    Named { name: name.into(), graph }
}

pub fn binary_tree(n: usize) -> Graph {
    Graph::from_edges(n, (1..n as Vertex).map(|v| ((v - 1) / 2, v))).unwrap()
}

/// Thirty fixed graphs: sixteen G(n, m) draws whose densities straddle the
/// `m = n^1.4` shortcut line, plus structured families.
pub fn corpus() -> Vec<Named> {
    let mut out = Vec::new();
    for (i, n) in [32usize, 64, 128, 256].into_iter().enumerate() {
        let max = (n * (n - 1) / 2) as u64;
        let base = (n as f64).powf(1.4);
        let mut ms: Vec<u64> = [0.5, 1.2, 2.0].iter().map(|c| (c * base).round() as u64).collect();
        ms.push(((n as f64).powf(1.8).floor() as u64).min(max));
        for (j, m) in ms.into_iter().enumerate() {
            let seed = 100 + 10 * i as u64 + j as u64;
            out.push(named(format!("gnm({n},{m},{seed})"), generate_gnm(n, m, seed).unwrap()));
        }
    }
    out.push(named("P2", path(2)));
    out.push(named("P10", path(10)));
    out.push(named("P50", path(50)));
    out.push(named("C3", cycle(3)));
    out.push(named("C6", cycle(6)));
    out.push(named("C31", cycle(31)));
    out.push(named("K1,10", star(10)));
    out.push(named("K1,40", star(40)));
    out.push(named("P10+C6+K1,10", disjoint_union(&[path(10), cycle(6), star(10)])));
    out.push(named(
        "gnm(40,300)+gnm(24,60)+E3",
        disjoint_union(&[generate_gnm(40, 300, 7).unwrap(), generate_gnm(24, 60, 8).unwrap(), Graph::empty(3)]),
    ));
    out.push(named("grid8x8", grid(8, 8)));
    out.push(named("K20", complete(20)));
    out.push(named("E10", Graph::empty(10)));
    out.push(named("bintree31", binary_tree(31)));
    assert_eq!(out.len(), 30);
    out
}

/// The vertex count the construction runs on for `mode`.
pub fn inner_n(g: &Graph, mode: u32) -> usize {
    if mode == 4 {
        2 * g.vertex_count()
    } else {
        g.vertex_count()
    }
}

/// Default thresholds plus two overrides that make steps 3 to 7 do real work
/// while staying inside the range where the stretch argument holds.
pub fn variants(g: &Graph, mode: u32) -> Vec<(&'static str, SpannerParams)> {
    let n = g.vertex_count().max(1);
    let avg = 2.0 * g.edge_count() as f64 / n as f64;
    let no_elim = SpannerParams {
        elim_threshold: Some(1e9),
        heavy_threshold: Some(avg.max(2.0)),
        f_threshold: Some((g.max_degree() as f64).max(1.0)),
        dense_shortcut: false,
        ..Default::default()
    };
    let default_elim = SpannerParams::default().resolve(inner_n(g, mode)).unwrap().elim;
    let low_heavy = SpannerParams {
        heavy_threshold: Some(2.0),
        f_threshold: Some(default_elim),
        dense_shortcut: false,
        ..Default::default()
    };
    vec![("default", SpannerParams::default()), ("no-elim", no_elim), ("low-heavy", low_heavy)]
}

/// Plain BFS distances, `u32::MAX` for unreachable.
pub fn bfs_dist(g: &Graph, root: Vertex) -> Vec<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    dist[root as usize] = 0;
    let mut q = VecDeque::from([root]);
    while let Some(u) = q.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = dist[u as usize] + 1;
                q.push_back(w);
            }
        }
    }
    dist
}

/// Minimum degree sum over every shortest root-to-`v` path, found by
/// enumerating all paths in the BFS DAG. Exponential; small graphs only.
pub fn brute_force_f(g: &Graph, root: Vertex) -> Vec<Option<u64>> {
    let dist = bfs_dist(g, root);
    let mut best = vec![None; g.vertex_count()];
    fn walk(g: &Graph, dist: &[u32], u: Vertex, acc: u64, best: &mut [Option<u64>]) {
        let acc = acc + g.degree(u) as u64;
        let slot = &mut best[u as usize];
        if slot.map_or(true, |b| acc < b) {
            *slot = Some(acc);
        }
        for &w in g.neighbors(u) {
            if dist[w as usize] == dist[u as usize] + 1 {
                walk(g, dist, w, acc, best);
            }
        }
    }
    walk(g, &dist, root, 0, &mut best);
    best
}

/// Fifty seeded random graphs with 2 to 10 vertices.
pub fn small_random_graphs() -> Vec<Graph> {
    (0..50u64)
        .map(|i| {
            let n = 2 + (i % 9) as usize;
            let max = (n * (n - 1) / 2) as u64;
            generate_gnm(n, (i * 7 + 3) % (max + 1), 1000 + i).unwrap()
        })
        .collect()
}
