//! Greedy dominating sets: a plain set-cover instance and the heavy-vertex
//! instance built from a graph.

use additive_spanner::domination::{attach_heavy_edges, heavy_domination_instance};
use additive_spanner::generate::star;
use additive_spanner::{greedy_cover, CoverInstance, ResidualGraph};

fn main() {
    // Candidates A:{0,1}, B:{2,3}, C:{1,2}.
    let inst = CoverInstance::new(4, vec![vec![0, 1], vec![2, 3], vec![1, 2]]);
    let picked: Vec<char> = greedy_cover(&inst)
        .unwrap()
        .into_iter()
        .map(|c| (b'A' + c as u8) as char)
        .collect();
    println!("set cover picks {picked:?}");

    let g = star(6);
    let rg = ResidualGraph::new(&g);
    let heavy = heavy_domination_instance(&rg, 1.0);
    let s1: Vec<u32> = greedy_cover(&heavy.instance)
        .unwrap()
        .into_iter()
        .map(|c| c as u32)
        .collect();
    let edges = attach_heavy_edges(&s1, &rg, &heavy.heavy).unwrap();
    println!("heavy vertices {:?} dominated by {s1:?} via {:?}", heavy.heavy, edges.as_slice());
}
