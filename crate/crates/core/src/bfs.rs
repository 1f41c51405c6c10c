//! Breadth-first trees over a residual graph.
//!
//! [`bfs_tree`] is the plain tree used when the construction "adds a BFS tree"
//! to the spanner. [`degree_min_bfs_tree`] builds the shortest-path tree whose
//! root-to-vertex paths have the smallest total vertex degree among all
//! shortest paths, together with the prefix sums `f` and subtree sums `s`.

use thiserror::Error;

use crate::graph::{EdgeSet, Vertex};
use crate::residual::ResidualGraph;

/// Distance marker for vertices the search never reached.
pub const UNREACHABLE: u32 = u32::MAX;
/// Parent marker for unreached vertices.
pub const NO_VERTEX: Vertex = Vertex::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BfsError {
    #[error("root {0} is not a live vertex")]
    DeadRoot(Vertex),
}

/// Layered search from `root`: returns distances and the visit order, which
/// is non-decreasing in distance. Neighbors are scanned in id order.
fn layered_search(g: &ResidualGraph<'_>, root: Vertex) -> Result<(Vec<u32>, Vec<Vertex>), BfsError> {
    if root as usize >= g.vertex_count() || !g.is_alive(root) {
        return Err(BfsError::DeadRoot(root));
    }
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut order = Vec::new();
    dist[root as usize] = 0;
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let du = dist[u as usize];
        for w in g.live_neighbors(u) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = du + 1;
                order.push(w);
            }
        }
    }
    Ok((dist, order))
}

fn tree_edges(parent: &[Vertex], order: &[Vertex]) -> EdgeSet {
    EdgeSet::from_pairs(order.iter().skip(1).map(|&u| (parent[u as usize], u)))
}

/// Plain BFS tree: every reached vertex is parented to the vertex that first
/// discovered it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BfsTree {
    pub root: Vertex,
    /// `parent[root] == root`; unreached vertices hold [`NO_VERTEX`].
    pub parent: Vec<Vertex>,
    /// Hop distance from the root, or [`UNREACHABLE`].
    pub dist: Vec<u32>,
    order: Vec<Vertex>,
}

impl BfsTree {
    pub fn edges(&self) -> EdgeSet {
        tree_edges(&self.parent, &self.order)
    }

    /// Reached vertices in visit order, root first.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }
}

pub fn bfs_tree(g: &ResidualGraph<'_>, root: Vertex) -> Result<BfsTree, BfsError> {
    if root as usize >= g.vertex_count() || !g.is_alive(root) {
        return Err(BfsError::DeadRoot(root));
    }
    let mut dist = vec![UNREACHABLE; g.vertex_count()];
    let mut parent = vec![NO_VERTEX; g.vertex_count()];
    let mut order = vec![root];
    dist[root as usize] = 0;
    parent[root as usize] = root;
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        for w in g.live_neighbors(u) {
            if dist[w as usize] == UNREACHABLE {
                dist[w as usize] = dist[u as usize] + 1;
                parent[w as usize] = u;
                order.push(w);
            }
        }
    }
    Ok(BfsTree { root, parent, dist, order })
}

/// Shortest-path tree minimizing the degree sum along each root path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMinTree {
    pub root: Vertex,
    /// `parent[root] == root`; unreached vertices hold [`NO_VERTEX`].
    pub parent: Vec<Vertex>,
    pub dist: Vec<u32>,
    /// Degree sum along the tree path from the root, root included.
    pub f: Vec<u64>,
    /// Degree sum over the subtree rooted at each vertex.
    pub s: Vec<u64>,
    order: Vec<Vertex>,
}

impl DegreeMinTree {
    #[inline]
    pub fn is_reachable(&self, u: Vertex) -> bool {
        self.dist[u as usize] != UNREACHABLE
    }

    pub fn parent_of(&self, u: Vertex) -> Option<Vertex> {
        self.is_reachable(u).then(|| self.parent[u as usize])
    }

    pub fn f_of(&self, u: Vertex) -> Option<u64> {
        self.is_reachable(u).then(|| self.f[u as usize])
    }

    pub fn s_of(&self, u: Vertex) -> Option<u64> {
        self.is_reachable(u).then(|| self.s[u as usize])
    }

    /// Reached vertices in non-decreasing distance, root first.
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    /// Tree path `root, ..., u`, or `None` when `u` is unreachable.
    pub fn path_to(&self, u: Vertex) -> Option<Vec<Vertex>> {
        if !self.is_reachable(u) {
            return None;
        }
        let mut path = Vec::with_capacity(self.dist[u as usize] as usize + 1);
        let mut x = u;
        path.push(x);
        while x != self.root {
            x = self.parent[x as usize];
            path.push(x);
        }
        path.reverse();
        Some(path)
    }

    pub fn edges(&self) -> EdgeSet {
        tree_edges(&self.parent, &self.order)
    }
}

/// Builds the degree-minimizing shortest-path tree rooted at `root`.
///
/// `deg` supplies the vertex weights (live degrees in the construction).
/// Parents are chosen layer by layer: among the neighbors one layer closer to
/// the root, the one with the smallest `(f, id)` wins.
pub fn degree_min_bfs_tree(
    g: &ResidualGraph<'_>,
    root: Vertex,
    deg: &[u32],
) -> Result<DegreeMinTree, BfsError> {
    let (dist, order) = layered_search(g, root)?;
    let n = g.vertex_count();
    let mut parent = vec![NO_VERTEX; n];
    let mut f = vec![0u64; n];
    let mut s = vec![0u64; n];

    parent[root as usize] = root;
    f[root as usize] = deg[root as usize] as u64;
    for &u in &order[1..] {
        let want = dist[u as usize] - 1;
        let mut best: Option<(u64, Vertex)> = None;
        for w in g.live_neighbors(u) {
            if dist[w as usize] == want && best.map_or(true, |(bf, _)| f[w as usize] < bf) {
                best = Some((f[w as usize], w));
            }
        }
        let (pf, p) = best.expect("every non-root vertex has a parent one layer up");
        parent[u as usize] = p;
        f[u as usize] = pf + deg[u as usize] as u64;
    }

    for &u in &order {
        s[u as usize] = deg[u as usize] as u64;
    }
    for &u in order[1..].iter().rev() {
        let p = parent[u as usize] as usize;
        s[p] += s[u as usize];
    }

    Ok(DegreeMinTree { root, parent, dist, f, s, order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, path};
    use crate::graph::Graph;

    #[test]
    fn path_bfs() {
        let g = path(3);
        let rg = ResidualGraph::new(&g);
        let t = bfs_tree(&rg, 0).unwrap();
        assert_eq!(t.edges().as_slice(), &[(0, 1), (1, 2)]);
        assert_eq!(t.dist, vec![0, 1, 2]);
    }

    #[test]
    fn cycle_bfs_uses_sorted_scan() {
        let g = cycle(4);
        let rg = ResidualGraph::new(&g);
        let t = bfs_tree(&rg, 0).unwrap();
        assert_eq!(t.edges().as_slice(), &[(0, 1), (0, 3), (1, 2)]);
        assert_eq!(t.dist, vec![0, 1, 2, 1]);
        assert_eq!(t.parent[2], 1);
    }

    #[test]
    fn isolated_root() {
        let g = Graph::empty(3);
        let rg = ResidualGraph::new(&g);
        let t = bfs_tree(&rg, 1).unwrap();
        assert!(t.edges().is_empty());
        assert_eq!(t.dist, vec![UNREACHABLE, 0, UNREACHABLE]);
    }

    #[test]
    fn dead_root_rejected() {
        let g = path(3);
        let mut rg = ResidualGraph::new(&g);
        rg.remove_vertex(1);
        assert_eq!(bfs_tree(&rg, 1), Err(BfsError::DeadRoot(1)));
        assert_eq!(
            degree_min_bfs_tree(&rg, 1, rg.live_degrees()).unwrap_err(),
            BfsError::DeadRoot(1)
        );
        // Dead vertices block traversal.
        let t = bfs_tree(&rg, 0).unwrap();
        assert_eq!(t.dist[2], UNREACHABLE);
    }

    #[test]
    fn path_prefix_and_subtree_sums() {
        let g = path(3);
        let rg = ResidualGraph::new(&g);
        let t = degree_min_bfs_tree(&rg, 0, rg.live_degrees()).unwrap();
        assert_eq!(t.f, vec![1, 3, 4]);
        assert_eq!(t.s, vec![4, 3, 1]);
        assert_eq!(t.path_to(2), Some(vec![0, 1, 2]));
    }

    #[test]
    fn picks_lighter_parent() {
        // 4-cycle 0-1-2-3-0 with a pendant 4 on vertex 1.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let rg = ResidualGraph::new(&g);
        assert_eq!(rg.live_degrees(), &[2, 3, 2, 2, 1]);
        let t = degree_min_bfs_tree(&rg, 0, rg.live_degrees()).unwrap();
        assert_eq!(t.f[1], 5);
        assert_eq!(t.f[3], 4);
        assert_eq!(t.parent[2], 3);
        assert_eq!(t.f[2], 6);
        // Plain BFS takes the first-discovered parent instead.
        assert_eq!(bfs_tree(&rg, 0).unwrap().parent[2], 1);
        assert_eq!(t.s[0], 10);
    }

    #[test]
    fn equal_f_ties_go_to_smaller_id() {
        let g = cycle(4);
        let rg = ResidualGraph::new(&g);
        let t = degree_min_bfs_tree(&rg, 0, rg.live_degrees()).unwrap();
        assert_eq!(t.parent[2], 1);
        assert_eq!(t.f_of(2), Some(6));
    }

    #[test]
    fn unreachable_vertices_have_no_values() {
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let rg = ResidualGraph::new(&g);
        let t = degree_min_bfs_tree(&rg, 0, rg.live_degrees()).unwrap();
        assert_eq!(t.f_of(3), None);
        assert_eq!(t.parent_of(2), None);
        assert_eq!(t.path_to(3), None);
        assert_eq!(t.s_of(0), Some(2));
    }
}
