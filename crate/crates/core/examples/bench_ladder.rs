//! Dense size ladder: edge counts, set sizes and per-phase times as CSV.
//!
//! ```bash
//! cargo run --release --example bench_ladder -- 256 512 1024
//! ```

use additive_spanner::cli::bench_row;
use additive_spanner::report::write_bench_csv;
use additive_spanner::SpannerParams;

fn main() {
    let sizes: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("sizes are integers"))
        .collect();
    let sizes = if sizes.is_empty() { vec![128, 256, 512] } else { sizes };
    let params = SpannerParams::default();

    let mut rows = Vec::new();
    for mode in [5, 4] {
        for &n in &sizes {
            let row = bench_row(n, 1.8, 1, mode, &params, None).expect("ladder row");
            assert!(row.spanner_edges <= row.m);
            rows.push(row);
        }
    }
    write_bench_csv(&rows, std::io::stdout()).expect("stdout");
}
