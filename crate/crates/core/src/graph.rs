//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Connectivity is a query, not an invariant: empty and disconnected graphs
//! are valid values, since the exhaustive enumerations range over them.

use std::collections::VecDeque;
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};

/// A simple undirected graph.
///
/// Edges are kept normalized as `(u, v)` with `u < v`, sorted and
/// deduplicated. Neighbor lists are built once at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from vertex pairs.
    ///
    /// Without `declared_n` the vertex count is one past the largest endpoint
    /// (0 for an empty list). Duplicate pairs, in either orientation, collapse
    /// to a single edge.
    pub fn from_edge_list<I>(pairs: I, declared_n: Option<usize>) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        let mut max_endpoint: Option<usize> = None;
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            let hi = u.max(v);
            if let Some(n) = declared_n {
                if hi >= n {
                    return Err(Error::EndpointOutOfRange { vertex: hi, n });
                }
            }
            max_endpoint = Some(max_endpoint.map_or(hi, |m| m.max(hi)));
            edges.push((u.min(v), hi));
        }
        let n = declared_n.unwrap_or_else(|| max_endpoint.map_or(0, |m| m + 1));
        edges.sort_unstable();
        edges.dedup();

        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph { n, edges, adj })
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Normalized edges `(u, v)`, `u < v`, in ascending order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(self.adj[v].len())
    }

    /// Degrees indexed by vertex id. The arrangement is kept, not sorted.
    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence(self.adj.iter().map(Vec::len).collect())
    }

    pub(crate) fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            components += 1;
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count() == 1
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    /// Minimum degree, maximum degree and the exact mean degree `2|E|/n`.
    pub fn min_max_mean_degree(&self) -> Result<(usize, usize, Ratio<usize>)> {
        if self.n == 0 {
            return Err(Error::EmptyGraph);
        }
        let degrees = self.degrees();
        let min = *degrees.iter().min().unwrap();
        let max = *degrees.iter().max().unwrap();
        Ok((min, max, Ratio::new(2 * self.edges.len(), self.n)))
    }

    /// Copy of this graph with one edge removed.
    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Graph::from_edge_list(edges, Some(self.n)).expect("subgraph of a valid graph")
    }
}

/// Per-vertex degrees in a meaningful order (vertex id or spine position).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn sorted_desc(&self) -> DegreeSequence {
        let mut values = self.0.clone();
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}
