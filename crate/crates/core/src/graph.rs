//! Labeled simple undirected graphs with 1-based vertex ids.
//!
//! [`Graph`] is the carrier for every guest and host network. Vertices are
//! `1..=order`; edges are stored in canonical `(u, v)` form with `u < v`.
//! The JSON form `{"name", "order", "edges": [[u, v], ...]}` is the
//! interchange format used by the command line tool.

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex id.
pub type Vertex = usize;

/// Unordered edge in canonical form (`.0 < .1`).
pub type Edge = (Vertex, Vertex);

/// Puts an edge into canonical `(min, max)` form.
#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphRecord", into = "GraphRecord")]
pub struct Graph {
    name: String,
    order: usize,
    edges: BTreeSet<Edge>,
    // adj[v - 1] holds the sorted neighbours of v
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a validated graph. Rejects out-of-range endpoints, self-loops
    /// and duplicate edges (in either orientation).
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if !set.insert(canonical(u, v)) {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &set {
            adj[u - 1].push(v);
            adj[v - 1].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph {
            name: String::new(),
            order,
            edges: set,
            adj,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.order
    }

    /// Edges in lexicographic order, each as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.order).contains(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.edges.contains(&canonical(u, v))
    }

    /// Sorted neighbours of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v - 1]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v - 1].len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    /// Maximum degree, 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Smallest vertex adjacent to every other vertex, if any. A graph has
    /// domination number 1 exactly when such a vertex exists.
    pub fn universal_vertex(&self) -> Option<Vertex> {
        self.vertices()
            .find(|&v| self.degree(v) + 1 == self.order)
    }

    /// Hop distances from `source`; `None` marks unreachable vertices.
    /// Index 0 of the result corresponds to vertex 1.
    pub fn bfs(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order];
        dist[source - 1] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            let dx = dist[x - 1].unwrap_or_default();
            for &y in self.neighbors(x) {
                if dist[y - 1].is_none() {
                    dist[y - 1] = Some(dx + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// The empty graph and the single vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.bfs(1).iter().all(Option::is_some)
    }

    /// Deletes `removed` vertices and compacts the survivors to `1..`. The
    /// returned vector maps each new id (index `new - 1`) to its old id.
    pub fn remove_vertices(&self, removed: &BTreeSet<Vertex>) -> (Graph, Vec<Vertex>) {
        let keep: Vec<Vertex> = self.vertices().filter(|v| !removed.contains(v)).collect();
        let mut relabel = vec![0; self.order + 1];
        for (i, &old) in keep.iter().enumerate() {
            relabel[old] = i + 1;
        }
        let edges = self
            .edges()
            .filter(|(u, v)| relabel[*u] != 0 && relabel[*v] != 0)
            .map(|(u, v)| (relabel[u], relabel[v]));
        let g = Graph::new(keep.len(), edges)
            .expect("subgraph of a valid graph is valid")
            .with_name(format!("{}-minus-{}", self.name, removed.len()));
        (g, keep)
    }

    /// Same vertex set with the given edges deleted; absent edges are ignored.
    pub fn remove_edges(&self, removed: &BTreeSet<Edge>) -> Graph {
        let edges = self.edges().filter(|e| !removed.contains(e));
        Graph::new(self.order, edges)
            .expect("subgraph of a valid graph is valid")
            .with_name(self.name.clone())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Wire form of [`Graph`].
#[derive(Serialize, Deserialize)]
struct GraphRecord {
    #[serde(default)]
    name: String,
    order: usize,
    edges: Vec<[Vertex; 2]>,
}

impl TryFrom<GraphRecord> for Graph {
    type Error = Error;

    fn try_from(rec: GraphRecord) -> Result<Self> {
        Ok(Graph::new(rec.order, rec.edges.into_iter().map(|[u, v]| (u, v)))?.with_name(rec.name))
    }
}

impl From<Graph> for GraphRecord {
    fn from(g: Graph) -> Self {
        GraphRecord {
            edges: g.edges().map(|(u, v)| [u, v]).collect(),
            name: g.name,
            order: g.order,
        }
    }
}
