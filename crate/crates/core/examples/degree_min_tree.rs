//! Shortest-path trees that minimize the degree sum along root paths.

use additive_spanner::{bfs_tree, degree_min_bfs_tree, Graph, ResidualGraph};

fn main() {
    // Four-cycle 0-1-2-3-0 with a pendant vertex 4 hanging off 1.
    let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
    let rg = ResidualGraph::new(&g);

    let plain = bfs_tree(&rg, 0).unwrap();
    let tree = degree_min_bfs_tree(&rg, 0, rg.live_degrees()).unwrap();

    println!("degrees: {:?}", rg.live_degrees());
    println!("plain BFS parent of 2: {}", plain.parent[2]);
    println!("degree-min parent of 2: {}", tree.parent[2]);
    println!("vertex  dist  f  s  path");
    for u in g.vertices() {
        println!(
            "{u:>6}  {:>4}  {:>1}  {:>2}  {:?}",
            tree.dist[u as usize],
            tree.f[u as usize],
            tree.s[u as usize],
            tree.path_to(u).unwrap()
        );
    }
}
