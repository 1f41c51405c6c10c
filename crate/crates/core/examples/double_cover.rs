//! The bipartite double cover behind the 4-additive reduction.

use additive_spanner::generate::cycle;
use additive_spanner::oracle::all_pairs_distances;
use additive_spanner::{build_4_spanner, double, project, SpannerParams};

fn main() {
    let g = cycle(3);
    let d = double(&g);
    println!("triangle doubles to {:?}", d.graph.edge_set().as_slice());

    let dist = all_pairs_distances(&d.graph, 4096).unwrap();
    println!(
        "L0-L1 distance {:?} (even), L0-R1 distance {:?} (odd)",
        dist.get(d.left(0), d.left(1)),
        dist.get(d.left(0), d.right(1))
    );

    let back = project(&d.graph.edge_set(), g.vertex_count()).unwrap();
    assert_eq!(back, g.edge_set());
    println!("projection recovers {:?}", back.as_slice());

    let g = additive_spanner::generate_gnm(40, 300, 9).unwrap();
    let r = build_4_spanner(&g, &SpannerParams { dense_shortcut: false, ..Default::default() }).unwrap();
    let doubled = r.doubled.as_ref().unwrap();
    println!(
        "G(40, 300): doubled graph {} vertices / {} edges, inner spanner {} edges, projected {} edges",
        doubled.vertex_count, doubled.edge_count, doubled.spanner_edge_count, r.spanner_edge_count
    );
}
