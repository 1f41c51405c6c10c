//! Immutable simple undirected graphs in compressed adjacency form, plus the
//! canonical edge-set type and the edge-list text format.
//!
//! The text format is line based:
//!
//! ```text
//! # comment
//! p <n> <m>
//! u v
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. The optional `p`
//! header fixes the vertex count (it must precede the first edge); without it
//! `n` is one more than the largest id seen. The declared `m` is informational.
//! Self-loops are dropped and duplicate or reversed edges merged.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Dense, zero-based vertex id.
pub type Vertex = u32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: vertex {vertex} out of bounds for n = {n}")]
    VertexOutOfBounds { line: usize, vertex: u64, n: usize },
    #[error("edge ({u}, {v}) out of bounds for n = {n}")]
    EdgeOutOfBounds { u: Vertex, v: Vertex, n: usize },
    #[error("cannot place {m} edges on {n} vertices (at most {max})")]
    Capacity { n: usize, m: u64, max: u64 },
    #[error("vertex count {0} exceeds the 32-bit id space")]
    TooManyVertices(usize),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Canonical `(min, max)` form of an unordered pair.
#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Deduplicated, canonically ordered set of undirected edges.
///
/// Serializes as a list of `[u, v]` pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeSet {
    edges: Vec<(Vertex, Vertex)>,
}

impl EdgeSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Canonicalizes, sorts and deduplicates. Self-loops are dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Vertex, Vertex)>>(pairs: I) -> Self {
        let mut edges: Vec<_> = pairs
            .into_iter()
            .filter(|(u, v)| u != v)
            .map(|(u, v)| canonical(u, v))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        Self { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&canonical(u, v)).is_ok()
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.edges.iter().peekable(), other.edges.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x < y {
                        out.push(*a.next().unwrap());
                    } else if y < x {
                        out.push(*b.next().unwrap());
                    } else {
                        out.push(*a.next().unwrap());
                        b.next();
                    }
                }
                (Some(_), None) => out.extend(a.by_ref().copied()),
                (None, Some(_)) => out.extend(b.by_ref().copied()),
                (None, None) => break,
            }
        }
        EdgeSet { edges: out }
    }

    pub fn is_subset_of(&self, g: &Graph) -> bool {
        self.iter().all(|(u, v)| g.has_edge(u, v))
    }

    /// Builds the graph `(V, self)` on `n` vertices.
    pub fn to_graph(&self, n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, self.iter())
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.iter().map(|(_, v)| v).max()
    }
}

impl FromIterator<(Vertex, Vertex)> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

/// Simple undirected graph with sorted neighbor lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.vertex_count())
            .field("m", &self.edge_count())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            neighbors: Vec::new(),
        }
    }

    /// Normalizing constructor: drops self-loops, merges duplicates and
    /// reversed pairs, and rejects endpoints `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > Vertex::MAX as usize {
            return Err(GraphError::TooManyVertices(n));
        }
        let set = EdgeSet::from_pairs(edges);
        if let Some((u, v)) = set.iter().find(|&(_, v)| v as usize >= n) {
            return Err(GraphError::EdgeOutOfBounds { u, v, n });
        }
        Ok(Self::from_canonical(n, &set))
    }

    fn from_canonical(n: usize, set: &EdgeSet) -> Self {
        let mut degree = vec![0usize; n];
        for (u, v) in set.iter() {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut neighbors = vec![0; 2 * set.len()];
        // Sorted (u, v) order fills every list in increasing order: smaller
        // neighbors arrive via (w, x) before any (x, v) with v > x.
        for (u, v) in set.iter() {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        Self { offsets, neighbors }
    }

    pub fn vertex_count(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.vertex_count() as Vertex
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        let n = self.vertex_count();
        if u as usize >= n || v as usize >= n {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) { (u, v) } else { (v, u) };
        self.neighbors(a).binary_search(&b).is_ok()
    }

    /// Edges in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            let nb = self.neighbors(u);
            let start = nb.partition_point(|&w| w <= u);
            nb[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet {
            edges: self.edges().collect(),
        }
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Writes the edge-list format: `p n m` header, then canonical edges.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        write_edge_list(self.vertex_count(), self.edges(), self.edge_count(), &mut out)
    }

    pub fn to_edge_list_string(&self) -> String {
        let mut buf = Vec::new();
        self.write_edge_list(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("edge list is ASCII")
    }
}

/// Writes an edge set on `n` vertices in the edge-list format.
pub fn write_edge_set<W: Write>(n: usize, edges: &EdgeSet, mut out: W) -> io::Result<()> {
    write_edge_list(n, edges.iter(), edges.len(), &mut out)
}

fn write_edge_list<W, I>(n: usize, edges: I, m: usize, out: &mut W) -> io::Result<()>
where
    W: Write,
    I: Iterator<Item = (Vertex, Vertex)>,
{
    let mut out = io::BufWriter::new(out);
    writeln!(out, "p {n} {m}")?;
    for (u, v) in edges {
        writeln!(out, "{u} {v}")?;
    }
    out.flush()
}

fn parse_id(tok: &str, line: usize) -> Result<u64, GraphError> {
    tok.parse::<u64>().map_err(|_| GraphError::Parse {
        line,
        message: format!("expected a nonnegative integer, found {tok:?}"),
    })
}

/// Parses the edge-list format from any buffered reader.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut declared_n: Option<usize> = None;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut max_id: Option<u64> = None;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_ascii_whitespace().collect();
        if tokens[0] == "p" {
            if declared_n.is_some() {
                return Err(GraphError::Parse { line: line_no, message: "duplicate header".into() });
            }
            if !edges.is_empty() {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: "header must precede the first edge".into(),
                });
            }
            if tokens.len() != 3 {
                return Err(GraphError::Parse {
                    line: line_no,
                    message: "header must be \"p <n> <m>\"".into(),
                });
            }
            let n = parse_id(tokens[1], line_no)?;
            parse_id(tokens[2], line_no)?;
            if n > Vertex::MAX as u64 {
                return Err(GraphError::TooManyVertices(n as usize));
            }
            declared_n = Some(n as usize);
            continue;
        }
        if tokens.len() != 2 {
            return Err(GraphError::Parse {
                line: line_no,
                message: format!("expected \"u v\", found {} tokens", tokens.len()),
            });
        }
        let u = parse_id(tokens[0], line_no)?;
        let v = parse_id(tokens[1], line_no)?;
        let limit = declared_n.map_or(Vertex::MAX as u64, |n| n as u64);
        for w in [u, v] {
            if w >= limit {
                return Err(GraphError::VertexOutOfBounds {
                    line: line_no,
                    vertex: w,
                    n: declared_n.unwrap_or(Vertex::MAX as usize),
                });
            }
        }
        max_id = Some(max_id.map_or(u.max(v), |m| m.max(u).max(v)));
        edges.push((u as Vertex, v as Vertex));
    }

    let n = declared_n.unwrap_or_else(|| max_id.map_or(0, |m| m as usize + 1));
    Graph::from_edges(n, edges)
}

impl FromStr for Graph {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_edge_list(s.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn adjacency(g: &Graph) -> Vec<Vec<Vertex>> {
        g.vertices().map(|v| g.neighbors(v).to_vec()).collect()
    }

    #[test]
    fn parses_simple_path() {
        let g: Graph = "0 1\n1 2".parse().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(adjacency(&g), vec![vec![1], vec![0, 2], vec![1]]);
    }

    #[test]
    fn drops_loops_and_merges_duplicates() {
        let g: Graph = "0 0\n0 1\n1 0".parse().unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn header_fixes_vertex_count() {
        let g: Graph = "p 5 1\n0 4".parse().unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 1);
        for v in 1..4 {
            assert_eq!(g.degree(v), 0);
        }
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g: Graph = "# hello\n\n0 1\n   \n# x y\n2 1\n".parse().unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn malformed_token_reports_line() {
        let err = "0 1\n1 x\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 2, .. }), "{err}");
        let err = "0 1 2\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
        let err = "0 -1\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, GraphError::Parse { line: 1, .. }));
    }

    #[test]
    fn id_beyond_header_is_bounds_error() {
        let err = "p 3 1\n\n0 3\n".parse::<Graph>().unwrap_err();
        assert!(matches!(err, GraphError::VertexOutOfBounds { line: 3, vertex: 3, n: 3 }));
    }

    #[test]
    fn late_or_repeated_header_is_rejected() {
        assert!(matches!("0 1\np 3 1\n".parse::<Graph>(), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!("p 3 0\np 3 0\n".parse::<Graph>(), Err(GraphError::Parse { line: 2, .. })));
    }

    #[test]
    fn degrees() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.degree(0), 3);
        assert_eq!(Graph::empty(3).degree(2), 0);
        let p3: Graph = "0 1\n1 2".parse().unwrap();
        assert_eq!(p3.degree(1), 2);
    }

    #[test]
    fn serialization_is_canonical() {
        let g = Graph::from_edges(4, [(3, 1), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.to_edge_list_string(), "p 4 3\n0 1\n0 2\n1 3\n");
    }

    #[test]
    fn out_of_range_edge_rejected() {
        assert!(matches!(
            Graph::from_edges(2, [(0, 1), (1, 2)]),
            Err(GraphError::EdgeOutOfBounds { u: 1, v: 2, n: 2 })
        ));
    }

    #[test]
    fn edge_set_union_and_lookup() {
        let a = EdgeSet::from_pairs([(1, 0), (2, 3)]);
        let b = EdgeSet::from_pairs([(0, 1), (4, 2)]);
        let u = a.union(&b);
        assert_eq!(u.as_slice(), &[(0, 1), (2, 3), (2, 4)]);
        assert!(u.contains(4, 2));
        assert!(!u.contains(0, 2));
    }
}
