//! Simple undirected graphs with bitset adjacency, plus the exact
//! pattern-freeness and coloring routines the verification checks rely on.

mod coloring;
mod enumerate;
pub mod families;
mod io;
mod patterns;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use coloring::{chromatic_number_exact, layer_chromatic_check, LayerEntry, LayerReport, MAX_CHROMATIC_N};
pub use enumerate::nonisomorphic_graphs;
pub use io::{GraphJson, Provenance};
pub use patterns::{Pattern, DEFAULT_SUBSET_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0} rejected")]
    LoopRejected(usize),
    #[error("vertex {index} out of range for graph on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("refused: {what} would need {work} steps (cap {cap})")]
    ComplexityRefused { what: &'static str, work: u128, cap: u128 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("malformed graph input: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Self { n, adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(), labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for index in [u, v] {
            if index >= self.n {
                return Err(GraphError::IndexOutOfRange { index, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopRejected(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].set(v, false);
        self.adj[v].set(u, false);
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn neighborhood(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n).flat_map(|u| self.adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v))).collect()
    }

    /// Distinct non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| ((u + 1)..self.n).filter(move |&v| !self.adj[u].contains(v)).map(move |v| (u, v)))
            .collect()
    }

    pub fn complement(&self) -> Graph {
        let mut out = Graph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                if u != v && !self.adj[u].contains(v) {
                    out.adj[u].insert(v);
                }
            }
        }
        out.labels = self.labels.clone();
        out
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut out = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    out.adj[i].insert(j);
                    out.adj[j].insert(i);
                }
            }
        }
        out
    }

    /// Graph with vertex `v` deleted (higher indices shift down by one).
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Layers `A_0 = {v}, A_1, ...` of vertices at exact distance `i` from `v`.
    /// Unreachable vertices are omitted; each layer is sorted.
    pub fn bfs_layers(&self, v: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        if v >= self.n {
            return Err(GraphError::IndexOutOfRange { index: v, n: self.n });
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        seen.insert(v);
        let mut layers = vec![vec![v]];
        loop {
            let mut next = Vec::new();
            for &u in layers.last().unwrap() {
                for w in self.adj[u].ones() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            layers.push(next);
        }
        Ok(layers)
    }

    /// Shortest-path distances from `source` within the vertices allowed by `mask`.
    pub(crate) fn distances_within(&self, source: usize, mask: &FixedBitSet) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].ones() {
                if mask.contains(w) && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.adj[u].contains(v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.adj[u].contains(v)))
    }

    /// Adjacency as a bit mask per vertex; only for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.n <= 64);
        self.adj.iter().map(|row| row.ones().fold(0u64, |m, v| m | (1u64 << v))).collect()
    }
}
