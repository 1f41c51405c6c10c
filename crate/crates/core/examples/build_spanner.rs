//! Build 4- and 5-additive spanners of a seeded random graph and certify them.
//!
//! ```bash
//! cargo run --example build_spanner -- 256 6000 42
//! ```

use additive_spanner::{
    build_4_spanner, build_5_spanner, edge_budget_report, generate_gnm, verify_stretch, SpannerParams,
};

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("arguments are integers"))
        .collect();
    let (n, m, seed) = match args[..] {
        [n, m, seed] => (n as usize, m, seed),
        [] => (256, 6000, 42),
        _ => panic!("usage: build_spanner [n m seed]"),
    };
    let g = generate_gnm(n, m, seed).expect("m fits");
    println!("G: n = {}, m = {}", g.vertex_count(), g.edge_count());

    let params = SpannerParams::default();
    for (k, result) in [
        (5, build_5_spanner(&g, &params).expect("construction")),
        (4, build_4_spanner(&g, &params).expect("construction")),
    ] {
        let verdict = verify_stretch(&g, &result.spanner_edges, k, 4096).expect("subgraph");
        let budget = edge_budget_report(&g, &result);
        println!(
            "{k}-additive: |H| = {} ({:.1}% of m, {:.4} of n^1.4 log^0.6 n), shortcut = {}, rounds = {}, max excess = {:?}, passed = {}",
            result.spanner_edge_count,
            100.0 * budget.ratio_to_m,
            budget.ratio_to_bound,
            result.shortcut_fired,
            result.elimination_rounds,
            verdict.report.max_excess,
            verdict.passed,
        );
        println!("  edges per step 1..7: {:?}", result.step_edge_counts);
    }
}
