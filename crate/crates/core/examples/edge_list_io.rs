//! Edge-list parsing, seeded generation and canonical serialization.

use additive_spanner::{generate_gnm, Graph};

fn main() {
    let g: Graph = "# a small graph\np 6 4\n0 1\n1 0\n2 2\n4 2\n3 1\n".parse().unwrap();
    print!("{}", g.to_edge_list_string());

    match "0 1\n1 two\n".parse::<Graph>() {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }

    let a = generate_gnm(100, 300, 42).unwrap();
    let b = generate_gnm(100, 300, 42).unwrap();
    assert_eq!(a.to_edge_list_string(), b.to_edge_list_string());
    println!("G(100, 300, seed 42) has {} edges, max degree {}", a.edge_count(), a.max_degree());
}
