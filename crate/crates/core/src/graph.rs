//! Simple undirected graphs over dense vertex indices.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

/// Vertex index, always in `0..vertex_count`.
pub type Vertex = usize;

/// Largest graph the bitmask enumeration kernels accept.
pub const MAX_MASK_VERTICES: usize = 64;

/// Finite simple undirected graph.
///
/// Edges are stored normalized as `(min, max)`; adjacency lists are sorted
/// and kept consistent with the edge set. Every vertex carries a label
/// (its name in the input file, or its index).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: BTreeSet<(Vertex, Vertex)>,
    adjacency: Vec<Vec<Vertex>>,
    labels: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph with {vertex_count} vertices")]
    OutOfRange { vertex: Vertex, vertex_count: usize },
}

impl Graph {
    /// Graph with `vertex_count` vertices and no edges.
    pub fn empty(vertex_count: usize) -> Self {
        Graph {
            edges: BTreeSet::new(),
            adjacency: vec![Vec::new(); vertex_count],
            labels: (0..vertex_count).map(|v| v.to_string()).collect(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut g = Graph::empty(vertex_count);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Inserts `{u, v}`; returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let n = self.vertex_count();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::OutOfRange {
                    vertex: w,
                    vertex_count: n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Ok(false);
        }
        for (a, b) in [(u, v), (v, u)] {
            let list = &mut self.adjacency[a];
            let pos = list.binary_search(&b).unwrap_err();
            list.insert(pos, b);
        }
        Ok(true)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.vertex_count(), "one label per vertex");
        self.labels = labels;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().copied()
    }

    /// Sorted neighbor list `N(v)`.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// True when some label differs from the vertex's own index.
    pub fn has_custom_labels(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .any(|(v, l)| *l != v.to_string())
    }

    pub fn isolated_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices().filter(|&v| self.degree(v) == 0)
    }

    /// Neighborhoods as bitmasks, for graphs with at most 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > MAX_MASK_VERTICES {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|ns| ns.iter().fold(0u64, |m, &u| m | (1 << u)))
                .collect(),
        )
    }

    /// True iff no edge of the graph has both endpoints in `set`.
    pub fn is_independent(&self, set: &VertexSet) -> bool {
        let members = set.as_slice();
        members
            .iter()
            .enumerate()
            .all(|(k, &u)| members[k + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// True iff every pair of distinct members is adjacent.
    pub fn is_clique(&self, set: &VertexSet) -> bool {
        let members = set.as_slice();
        members
            .iter()
            .enumerate()
            .all(|(k, &u)| members[k + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True iff every edge has at least one endpoint in `cover`.
    pub fn is_vertex_cover(&self, cover: &VertexSet) -> bool {
        self.edges()
            .all(|(u, v)| cover.contains(u) || cover.contains(v))
    }

    /// `V(G) \ set`.
    pub fn complement_of(&self, set: &VertexSet) -> VertexSet {
        VertexSet(self.vertices().filter(|&v| !set.contains(v)).collect())
    }

    /// Breadth-first shortest-path length between `u` and `v`.
    pub fn distance(&self, u: Vertex, v: Vertex) -> Distance {
        if u == v {
            return Distance::Finite(0);
        }
        let mut dist = vec![usize::MAX; self.vertex_count()];
        let mut queue = VecDeque::from([u]);
        dist[u] = 0;
        while let Some(x) = queue.pop_front() {
            for &y in self.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    if y == v {
                        return Distance::Finite(dist[y]);
                    }
                    queue.push_back(y);
                }
            }
        }
        Distance::Unreachable
    }

    /// Component id per vertex; ids are assigned in order of each
    /// component's lowest vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.vertex_count()];
        let mut next = 0;
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// Connected with at least one vertex.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() > 0 && self.components().iter().all(|&c| c == 0)
    }

    /// BFS 2-coloring, each component rooted at its lowest vertex with
    /// color 0. `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.vertex_count()];
        for s in self.vertices() {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in self.neighbors(x) {
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        queue.push_back(y);
                    } else if color[y] == color[x] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Subgraph induced on `set`, relabeled `0..set.len()`. The returned
    /// mapping sends each new index to its original vertex.
    pub fn induced_subgraph(&self, set: &VertexSet) -> (Graph, Vec<Vertex>) {
        let mapping = set.as_slice().to_vec();
        let mut sub = Graph::empty(mapping.len());
        for (a, &u) in mapping.iter().enumerate() {
            for (b, &v) in mapping.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    sub.add_edge(a, b).expect("indices in range");
                }
            }
        }
        let labels = mapping.iter().map(|&v| self.labels[v].clone()).collect();
        (sub.with_labels(labels), mapping)
    }
}

/// Shortest-path length, or a marker for different components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Distance {
    Finite(usize),
    Unreachable,
}

/// Sorted, duplicate-free set of vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&v| mask >> v & 1 == 1).collect())
    }

    /// Bitmask form; panics if a member is 64 or larger.
    pub fn to_mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| {
            assert!(v < MAX_MASK_VERTICES, "vertex {v} does not fit a u64 mask");
            m | 1 << v
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0.iter().copied()
    }

    pub fn min(&self) -> Option<Vertex> {
        self.0.first().copied()
    }

    pub fn max(&self) -> Option<Vertex> {
        self.0.last().copied()
    }

    /// Every member is a valid index of `g`.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.max().is_none_or(|v| v < g.vertex_count())
    }

    /// Members rendered with the graph's vertex labels.
    pub fn labeled(&self, g: &Graph) -> Vec<String> {
        self.iter().map(|v| g.label(v).to_string()).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet(members)
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(members: [Vertex; N]) -> Self {
        members.into_iter().collect()
    }
}

impl From<Vec<Vertex>> for VertexSet {
    fn from(members: Vec<Vertex>) -> Self {
        members.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
