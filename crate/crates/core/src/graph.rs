//! Simple undirected graphs on dense vertex labels `0..n`.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// A vertex label.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid edge ({0}, {1}) on {2} vertices")]
    InvalidEdge(Vertex, Vertex, usize),
    #[error("graph is not connected")]
    NotConnected,
    #[error("graph6 parse error: {0}")]
    ParseError(String),
}

/// An immutable simple undirected graph.
///
/// Neighbor lists are kept sorted, so two graphs compare equal exactly when
/// they have the same labeled edge set.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate pairs collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(GraphError::InvalidEdge(u, v, n));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Sorts and dedups neighbor lists. Callers guarantee symmetry and no loops.
    pub(crate) fn from_raw_adjacency(mut adjacency: Vec<Vec<Vertex>>) -> Self {
        let mut degree_sum = 0;
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
            degree_sum += nbrs.len();
        }
        Graph {
            adjacency,
            edge_count: degree_sum / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_vec(&self) -> Vec<(Vertex, Vertex)> {
        self.edges().collect()
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.vertex_count() >= 1
            && self.edge_count + 1 == self.vertex_count()
            && self.is_connected()
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(
            perm.len(),
            self.vertex_count(),
            "permutation length mismatch"
        );
        let mut adjacency = vec![Vec::new(); self.vertex_count()];
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            adjacency[perm[u]] = nbrs.iter().map(|&v| perm[v]).collect();
        }
        Self::from_raw_adjacency(adjacency)
    }

    /// Adds a new vertex adjacent to each of `attach_to`; returns the graph
    /// and the new vertex label (`n`).
    pub fn with_new_vertex(&self, attach_to: &[Vertex]) -> (Graph, Vertex) {
        let mut adjacency = self.adjacency.clone();
        let new = adjacency.len();
        adjacency.push(attach_to.to_vec());
        for &u in attach_to {
            adjacency[u].push(new);
        }
        (Self::from_raw_adjacency(adjacency), new)
    }

    /// Returns an editable copy of the edge structure.
    pub(crate) fn to_edit(&self) -> GraphEdit {
        GraphEdit {
            adjacency: self.adjacency.clone(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.vertex_count(),
            self.edge_vec()
        )
    }
}

/// Mutable scratch copy used by the rewrite operations.
#[derive(Debug, Clone)]
pub(crate) struct GraphEdit {
    adjacency: Vec<Vec<Vertex>>,
}

impl GraphEdit {
    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert_ne!(u, v);
        if !self.adjacency[u].contains(&v) {
            self.adjacency[u].push(v);
            self.adjacency[v].push(u);
        }
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) {
        self.adjacency[u].retain(|&x| x != v);
        self.adjacency[v].retain(|&x| x != u);
    }

    pub(crate) fn isolate(&mut self, v: Vertex) {
        for u in std::mem::take(&mut self.adjacency[v]) {
            self.adjacency[u].retain(|&x| x != v);
        }
    }

    /// Keeps all vertices and labels.
    pub(crate) fn finish(self) -> Graph {
        Graph::from_raw_adjacency(self.adjacency)
    }

    /// Drops `removed` vertices (which must already be isolated) and
    /// compacts the remaining labels in increasing order.
    pub(crate) fn finish_without(self, removed: &[Vertex]) -> Graph {
        let n = self.adjacency.len();
        let mut keep = vec![true; n];
        for &v in removed {
            debug_assert!(self.adjacency[v].is_empty());
            keep[v] = false;
        }
        let mut new_label = vec![usize::MAX; n];
        let mut next = 0;
        for v in 0..n {
            if keep[v] {
                new_label[v] = next;
                next += 1;
            }
        }
        let adjacency = self
            .adjacency
            .into_iter()
            .enumerate()
            .filter(|(v, _)| keep[*v])
            .map(|(_, nbrs)| nbrs.into_iter().map(|u| new_label[u]).collect())
            .collect();
        Graph::from_raw_adjacency(adjacency)
    }
}
