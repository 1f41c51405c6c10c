use crate::graph::{Graph, Vertex};

/// Mutable view of a base graph with deleted vertices masked out.
///
/// `live_degree(v)` counts live neighbors of a live `v` (zero once `v` is
/// deleted) and `live_edge_count()` is half their sum.
#[derive(Debug, Clone)]
pub struct ResidualGraph<'g> {
    base: &'g Graph,
    alive: Vec<bool>,
    live_degree: Vec<u32>,
    live_edges: usize,
}

impl<'g> ResidualGraph<'g> {
    pub fn new(base: &'g Graph) -> Self {
        Self {
            base,
            alive: vec![true; base.vertex_count()],
            live_degree: base.vertices().map(|v| base.degree(v) as u32).collect(),
            live_edges: base.edge_count(),
        }
    }

    pub fn base(&self) -> &'g Graph {
        self.base
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.len()
    }

    #[inline]
    pub fn is_alive(&self, v: Vertex) -> bool {
        self.alive[v as usize]
    }

    #[inline]
    pub fn live_degree(&self, v: Vertex) -> u32 {
        self.live_degree[v as usize]
    }

    pub fn live_degrees(&self) -> &[u32] {
        &self.live_degree
    }

    pub fn live_edge_count(&self) -> usize {
        self.live_edges
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.base.vertices().filter(move |&v| self.alive[v as usize])
    }

    /// Live neighbors in increasing id order.
    #[inline]
    pub fn live_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.base
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.alive[w as usize])
    }

    /// Live edges in canonical order.
    pub fn live_edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.base
            .edges()
            .filter(move |&(u, v)| self.alive[u as usize] && self.alive[v as usize])
    }

    pub fn is_live_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.is_alive(u) && self.is_alive(v) && self.base.has_edge(u, v)
    }

    /// Deletes `v` and its incident live edges. No-op on a dead vertex.
    pub fn remove_vertex(&mut self, v: Vertex) {
        let vi = v as usize;
        if !self.alive[vi] {
            return;
        }
        self.alive[vi] = false;
        self.live_edges -= self.live_degree[vi] as usize;
        self.live_degree[vi] = 0;
        for &w in self.base.neighbors(v) {
            if self.alive[w as usize] {
                self.live_degree[w as usize] -= 1;
            }
        }
    }

    /// Live vertex of maximum live degree, smallest id on ties.
    pub fn max_degree_vertex(&self) -> Option<(Vertex, u32)> {
        let mut best: Option<(Vertex, u32)> = None;
        for v in self.live_vertices() {
            let d = self.live_degree[v as usize];
            if best.map_or(true, |(_, bd)| d > bd) {
                best = Some((v, d));
            }
        }
        best
    }

    pub fn max_live_degree(&self) -> u32 {
        self.max_degree_vertex().map_or(0, |(_, d)| d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate_gnm, star};

    #[test]
    fn removal_keeps_degrees_consistent() {
        let g = generate_gnm(40, 150, 3).unwrap();
        let mut rg = ResidualGraph::new(&g);
        for v in [5, 17, 5, 30, 0] {
            rg.remove_vertex(v);
            let sum: usize = rg.live_degrees().iter().map(|&d| d as usize).sum();
            assert_eq!(sum, 2 * rg.live_edge_count());
            assert_eq!(rg.live_edges().count(), rg.live_edge_count());
            for u in rg.live_vertices() {
                assert_eq!(rg.live_neighbors(u).count() as u32, rg.live_degree(u));
            }
        }
        assert!(!rg.is_alive(5));
        assert_eq!(rg.live_degree(5), 0);
    }

    #[test]
    fn max_degree_prefers_smaller_id() {
        let g = crate::generate::disjoint_union(&[star(3), star(3)]);
        let rg = ResidualGraph::new(&g);
        assert_eq!(rg.max_degree_vertex(), Some((0, 3)));
        let g = star(4);
        let mut rg = ResidualGraph::new(&g);
        rg.remove_vertex(0);
        assert_eq!(rg.max_degree_vertex(), Some((1, 0)));
        assert_eq!(rg.live_edge_count(), 0);
    }
}
