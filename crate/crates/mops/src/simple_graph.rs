//! Plain vertex/edge-list graphs, used for residuals `G - N[S]` (which are
//! generally not maximal outerplanar).

use thiserror::Error;

/// A simple undirected graph over arbitrary integer labels.
///
/// Vertices and edges are kept sorted, so two graphs compare equal exactly
/// when they have the same vertex and edge sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

/// Why a vertex/edge list does not form a simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphViolation {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge {{{0}, {1}}} has an endpoint outside the vertex set")]
    DanglingEndpoint(usize, usize),
}

impl SimpleGraph {
    /// Builds a graph, normalizing edge orientation and sort order.
    pub fn new(
        vertices: impl IntoIterator<Item = usize>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphViolation> {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut norm = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(GraphViolation::SelfLoop(u));
            }
            let e = (u.min(v), u.max(v));
            if vertices.binary_search(&e.0).is_err() || vertices.binary_search(&e.1).is_err() {
                return Err(GraphViolation::DanglingEndpoint(e.0, e.1));
            }
            norm.push(e);
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphViolation::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(SimpleGraph { vertices, edges: norm })
    }

    pub fn empty() -> Self {
        SimpleGraph { vertices: Vec::new(), edges: Vec::new() }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Largest degree over all vertices; 0 for an edgeless or empty graph.
    pub fn max_degree(&self) -> usize {
        self.vertices.iter().map(|&v| self.degree(v)).max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_self_loop() {
        let err = SimpleGraph::new([0, 1], [(0, 0)]).unwrap_err();
        assert_eq!(err, GraphViolation::SelfLoop(0));
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = SimpleGraph::new([0, 1], [(0, 1), (1, 0)]).unwrap_err();
        assert_eq!(err, GraphViolation::DuplicateEdge(0, 1));
    }

    #[test]
    fn rejects_dangling_endpoint() {
        let err = SimpleGraph::new([0, 1], [(0, 2)]).unwrap_err();
        assert_eq!(err, GraphViolation::DanglingEndpoint(0, 2));
    }

    #[test]
    fn degrees() {
        let g = SimpleGraph::new([3, 4, 5], [(3, 4), (4, 5)]).unwrap();
        assert_eq!(g.degree(4), 2);
        assert_eq!(g.degree(3), 1);
        assert_eq!(g.max_degree(), 2);
        assert!(g.contains_edge(5, 4));
        assert!(!g.contains_edge(3, 5));
    }
}
