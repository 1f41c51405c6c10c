//! Greedy covering: repeatedly take the candidate that covers the most
//! still-uncovered targets until every target is covered.
//!
//! The same routine serves both dominating-set steps of the construction:
//! heavy vertices dominated by closed neighborhoods, and tree-path segments
//! dominated by vertices adjacent to them.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::graph::{EdgeSet, Vertex};
use crate::residual::ResidualGraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DominationError {
    #[error("target {0} is not covered by any candidate")]
    Uncoverable(usize),
    #[error("candidate {candidate} lists target {target} but only {target_count} targets exist")]
    TargetOutOfRange {
        candidate: usize,
        target: u32,
        target_count: usize,
    },
    #[error("heavy vertex {0} is neither in the dominating set nor adjacent to it")]
    Undominated(Vertex),
}

/// Set-cover instance: `coverage[c]` lists the targets candidate `c` covers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CoverInstance {
    pub target_count: usize,
    pub coverage: Vec<Vec<u32>>,
}

impl CoverInstance {
    /// Sorts and deduplicates each coverage list.
    pub fn new(target_count: usize, mut coverage: Vec<Vec<u32>>) -> Self {
        for list in &mut coverage {
            list.sort_unstable();
            list.dedup();
        }
        Self { target_count, coverage }
    }

    pub fn candidate_count(&self) -> usize {
        self.coverage.len()
    }

    fn validate(&self) -> Result<(), DominationError> {
        let mut covered = vec![false; self.target_count];
        for (c, list) in self.coverage.iter().enumerate() {
            for &t in list {
                let slot = covered.get_mut(t as usize).ok_or(DominationError::TargetOutOfRange {
                    candidate: c,
                    target: t,
                    target_count: self.target_count,
                })?;
                *slot = true;
            }
        }
        match covered.iter().position(|&c| !c) {
            Some(t) => Err(DominationError::Uncoverable(t)),
            None => Ok(()),
        }
    }

    /// True when the candidates in `chosen` jointly cover every target.
    pub fn is_covered_by(&self, chosen: &[usize]) -> bool {
        let mut covered = vec![false; self.target_count];
        for &c in chosen {
            for &t in &self.coverage[c] {
                covered[t as usize] = true;
            }
        }
        covered.into_iter().all(|c| c)
    }
}

/// Greedy cover with ties broken by the smaller candidate id.
///
/// Heap keys are upper bounds on each candidate's current gain; a popped
/// entry is re-scored and pushed back when stale, so a candidate is taken
/// only when its exact gain is maximal.
pub fn greedy_cover(inst: &CoverInstance) -> Result<Vec<usize>, DominationError> {
    inst.validate()?;
    let mut covered = vec![false; inst.target_count];
    let mut remaining = inst.target_count;
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = inst
        .coverage
        .iter()
        .enumerate()
        .filter(|(_, list)| !list.is_empty())
        .map(|(c, list)| (list.len(), Reverse(c)))
        .collect();
    let mut chosen = Vec::new();

    while remaining > 0 {
        let (key, Reverse(c)) = heap.pop().expect("feasible instance keeps a useful candidate");
        let gain = inst.coverage[c].iter().filter(|&&t| !covered[t as usize]).count();
        if gain == 0 {
            continue;
        }
        if gain < key {
            heap.push((gain, Reverse(c)));
            continue;
        }
        for &t in &inst.coverage[c] {
            if !covered[t as usize] {
                covered[t as usize] = true;
                remaining -= 1;
            }
        }
        chosen.push(c);
    }

    debug_assert!(inst.is_covered_by(&chosen));
    Ok(chosen)
}

/// Step-3 instance over the residual graph: candidates are vertex ids (dead
/// vertices cover nothing), targets are the heavy live vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeavyInstance {
    pub instance: CoverInstance,
    /// Target index to vertex id, increasing.
    pub heavy: Vec<Vertex>,
}

/// Heavy means live degree `>= heavy_threshold`. A vertex dominates its
/// closed neighborhood.
pub fn heavy_domination_instance(g: &ResidualGraph<'_>, heavy_threshold: f64) -> HeavyInstance {
    let heavy: Vec<Vertex> = g
        .live_vertices()
        .filter(|&v| g.live_degree(v) as f64 >= heavy_threshold)
        .collect();
    let mut coverage = vec![Vec::new(); g.vertex_count()];
    for (t, &u) in heavy.iter().enumerate() {
        coverage[u as usize].push(t as u32);
        for x in g.live_neighbors(u) {
            coverage[x as usize].push(t as u32);
        }
    }
    // Targets were pushed in increasing order, but closed neighborhoods put
    // `u` itself out of sequence.
    HeavyInstance {
        instance: CoverInstance::new(heavy.len(), coverage),
        heavy,
    }
}

/// One edge per heavy vertex outside `s1`, to its smallest-id neighbor in
/// `s1`. Heavy vertices inside `s1` dominate themselves and add nothing.
pub fn attach_heavy_edges(
    s1: &[Vertex],
    g: &ResidualGraph<'_>,
    heavy: &[Vertex],
) -> Result<EdgeSet, DominationError> {
    let mut in_s1 = vec![false; g.vertex_count()];
    for &s in s1 {
        in_s1[s as usize] = true;
    }
    let mut edges = Vec::with_capacity(heavy.len());
    for &u in heavy {
        if in_s1[u as usize] {
            continue;
        }
        let s = g
            .live_neighbors(u)
            .find(|&w| in_s1[w as usize])
            .ok_or(DominationError::Undominated(u))?;
        edges.push((u, s));
    }
    Ok(EdgeSet::from_pairs(edges))
}
