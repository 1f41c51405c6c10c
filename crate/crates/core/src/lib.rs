//! Deterministic additive spanners.
//!
//! An additive `k`-spanner of an unweighted undirected graph `G` is a
//! subgraph `H` with `dist_H(u, v) <= dist_G(u, v) + k` for every pair. This
//! crate builds 5-additive spanners by high-degree elimination, greedy
//! dominating sets and degree-minimizing shortest-path trees, and 4-additive
//! spanners by running that construction on the bipartite double cover. An
//! exact all-pairs oracle certifies the output.
//!
//! ```
//! use additive_spanner::{build_4_spanner, generate_gnm, verify_stretch, SpannerParams};
//!
//! let g = generate_gnm(64, 400, 7).unwrap();
//! let result = build_4_spanner(&g, &SpannerParams::default()).unwrap();
//! let verdict = verify_stretch(&g, &result.spanner_edges, 4, 4096).unwrap();
//! assert!(verdict.passed);
//! ```

pub mod bfs;
pub mod cli;
pub mod domination;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod params;
pub mod reduction;
pub mod report;
pub mod residual;
pub mod spanner5;

pub use bfs::{bfs_tree, degree_min_bfs_tree, BfsTree, DegreeMinTree};
pub use domination::{greedy_cover, CoverInstance};
pub use generate::generate_gnm;
pub use graph::{parse_edge_list, EdgeSet, Graph, GraphError, Vertex};
pub use oracle::{all_pairs_distances, edge_budget_report, verify_stretch, StretchReport, StretchVerdict};
pub use params::{SpannerParams, Thresholds};
pub use reduction::{build_4_spanner, double, project, DoubledGraph};
pub use residual::ResidualGraph;
pub use spanner5::{build_5_spanner, SpannerError, SpannerResult};
