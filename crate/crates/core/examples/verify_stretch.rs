//! Exact stretch certification on a six-cycle with one edge removed.

use additive_spanner::generate::cycle;
use additive_spanner::{all_pairs_distances, verify_stretch, EdgeSet};

fn main() {
    let g = cycle(6);
    let h = EdgeSet::from_pairs(g.edges().filter(|&e| e != (0, 5)));

    let d = all_pairs_distances(&g, 4096).unwrap();
    println!("dist_G(0, 5) = {:?}", d.get(0, 5));

    for k in [4, 3] {
        let v = verify_stretch(&g, &h, k, 4096).unwrap();
        println!(
            "k = {k}: passed = {}, max excess = {:?} at {:?}",
            v.passed, v.report.max_excess, v.report.worst_pair
        );
    }
    let v = verify_stretch(&g, &h, 4, 4096).unwrap();
    println!("{}", serde_json::to_string_pretty(&v.report).unwrap());
}
