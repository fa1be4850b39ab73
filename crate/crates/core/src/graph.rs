//! Simple connected graphs, hop distances, and the edge-side vertex sets.

use std::collections::HashMap;
use std::collections::VecDeque;

use rayon::prelude::*;
use thiserror::Error;

use crate::weight::Weight;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Distance value used for vertices not (yet) reached by a search.
pub const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("edge {edge} has endpoint {vertex} outside 0..{n}")]
    IndexOutOfRange {
        edge: EdgeId,
        vertex: usize,
        n: usize,
    },
    #[error("edge {edge} is a self-loop at vertex {vertex}")]
    SelfLoop { edge: EdgeId, vertex: VertexId },
    #[error("edge {edge} ({u}, {v}) duplicates edge {first}")]
    DuplicateEdge {
        edge: EdgeId,
        first: EdgeId,
        u: VertexId,
        v: VertexId,
    },
    #[error("graph is disconnected: vertex {vertex} is unreachable from vertex 0")]
    Disconnected { vertex: VertexId },
    #[error("expected {expected} {what} weights, found {found}")]
    WeightCount {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("weight of vertex {0} is negative or not finite")]
    InvalidVertexWeight(VertexId),
    #[error("weight of edge {0} is negative or not finite")]
    InvalidEdgeWeight(EdgeId),
}

/// A simple, finite, connected, undirected graph with dense vertex and edge
/// ids. Edge ids follow input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    // neighbors of v are adjacency[offsets[v]..offsets[v + 1]], in edge-id order
    offsets: Vec<usize>,
    adjacency: Vec<(VertexId, EdgeId)>,
}

impl Graph {
    /// Validates and builds a graph on vertices `0..n`.
    pub fn new<I>(n: usize, edge_list: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut edges = Vec::new();
        let mut degree = vec![0usize; n];
        let mut seen: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
        for (edge, (u, v)) in edge_list.into_iter().enumerate() {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GraphError::IndexOutOfRange { edge, vertex, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge, vertex: u });
            }
            if let Some(&first) = seen.get(&(u.min(v), u.max(v))) {
                return Err(GraphError::DuplicateEdge { edge, first, u, v });
            }
            seen.insert((u.min(v), u.max(v)), edge);
            degree[u] += 1;
            degree[v] += 1;
            edges.push((u, v));
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut adjacency = vec![(0, 0); 2 * edges.len()];
        for (edge, &(u, v)) in edges.iter().enumerate() {
            adjacency[fill[u]] = (v, edge);
            fill[u] += 1;
            adjacency[fill[v]] = (u, edge);
            fill[v] += 1;
        }
        let graph = Self {
            n,
            edges,
            offsets,
            adjacency,
        };
        let dist = graph.bfs_distances(0);
        if let Some(vertex) = dist.iter().position(|&d| d == UNREACHED) {
            return Err(GraphError::Disconnected { vertex });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Neighbors of `v` paired with the id of the connecting edge.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn is_tree(&self) -> bool {
        self.edges.len() + 1 == self.n
    }

    /// Hop distances from `source` to every vertex.
    pub fn bfs_distances(&self, source: VertexId) -> Vec<u32> {
        let mut dist = vec![UNREACHED; self.n];
        let mut queue = VecDeque::with_capacity(self.n);
        self.bfs_into(source, &mut dist, &mut queue);
        dist
    }

    /// BFS reusing caller-owned buffers; `dist` is overwritten.
    pub(crate) fn bfs_into(
        &self,
        source: VertexId,
        dist: &mut [u32],
        queue: &mut VecDeque<VertexId>,
    ) {
        dist.fill(UNREACHED);
        queue.clear();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(x) = queue.pop_front() {
            let next = dist[x] + 1;
            for &(y, _) in self.neighbors(x) {
                if dist[y] == UNREACHED {
                    dist[y] = next;
                    queue.push_back(y);
                }
            }
        }
    }

    /// All-pairs hop distances, one BFS per source.
    pub fn distance_table(&self) -> DistanceTable {
        let n = self.n;
        let rows: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|s| self.bfs_distances(s))
            .collect();
        DistanceTable {
            n,
            data: rows.concat(),
        }
    }

    /// Vertices strictly closer to each endpoint of `e`, and the rest.
    pub fn edge_split(&self, e: EdgeId) -> EdgeSplit {
        let (u, v) = self.edges[e];
        let du = self.bfs_distances(u);
        let dv = self.bfs_distances(v);
        EdgeSplit::from_distances(e, &du, &dv)
    }

    /// Connected components of the graph with the `removed` edges deleted.
    ///
    /// Labels are assigned in order of each component's smallest vertex.
    pub fn components_after_removal(&self, removed: &[EdgeId]) -> Components {
        let mut mask = vec![false; self.edges.len()];
        for &e in removed {
            mask[e] = true;
        }
        self.components_without(&mask)
    }

    pub(crate) fn components_without(&self, removed: &[bool]) -> Components {
        const NONE: usize = usize::MAX;
        let mut labels = vec![NONE; self.n];
        let mut count = 0;
        let mut stack = Vec::new();
        for start in 0..self.n {
            if labels[start] != NONE {
                continue;
            }
            labels[start] = count;
            stack.push(start);
            while let Some(x) = stack.pop() {
                for &(y, e) in self.neighbors(x) {
                    if !removed[e] && labels[y] == NONE {
                        labels[y] = count;
                        stack.push(y);
                    }
                }
            }
            count += 1;
        }
        Components { labels, count }
    }
}

/// Row-major `n × n` hop-distance matrix.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    data: Vec<u32>,
}

impl DistanceTable {
    pub fn get(&self, u: VertexId, v: VertexId) -> u32 {
        self.data[u * self.n + v]
    }

    pub fn row(&self, u: VertexId) -> &[u32] {
        &self.data[u * self.n..(u + 1) * self.n]
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// `N_u(e)`, `N_v(e)` and the equidistant remainder for one edge `e = uv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSplit {
    pub edge: EdgeId,
    pub near_u: Vec<VertexId>,
    pub near_v: Vec<VertexId>,
    pub equidistant: Vec<VertexId>,
}

impl EdgeSplit {
    /// Classifies every vertex from the distance rows of `u` and `v`.
    pub fn from_distances(edge: EdgeId, du: &[u32], dv: &[u32]) -> Self {
        let mut split = EdgeSplit {
            edge,
            near_u: Vec::new(),
            near_v: Vec::new(),
            equidistant: Vec::new(),
        };
        for (x, (&a, &b)) in du.iter().zip(dv).enumerate() {
            match a.cmp(&b) {
                std::cmp::Ordering::Less => split.near_u.push(x),
                std::cmp::Ordering::Greater => split.near_v.push(x),
                std::cmp::Ordering::Equal => split.equidistant.push(x),
            }
        }
        split
    }

    /// `(n_u, n_v)` under the vertex weights `w`.
    pub fn weighted_sides<W: Weight>(&self, w: &[W]) -> (W, W) {
        let side = |s: &[VertexId]| s.iter().map(|&x| w[x]).sum::<W>();
        (side(&self.near_u), side(&self.near_v))
    }
}

/// Component label per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl Components {
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }
}

/// A graph with nonnegative vertex weights `w` and edge weights `w′`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph<W> {
    graph: Graph,
    vertex_weights: Vec<W>,
    edge_weights: Vec<W>,
}

impl<W: Weight> WeightedGraph<W> {
    pub fn new(
        graph: Graph,
        vertex_weights: Vec<W>,
        edge_weights: Vec<W>,
    ) -> Result<Self, GraphError> {
        if vertex_weights.len() != graph.vertex_count() {
            return Err(GraphError::WeightCount {
                what: "vertex",
                expected: graph.vertex_count(),
                found: vertex_weights.len(),
            });
        }
        if edge_weights.len() != graph.edge_count() {
            return Err(GraphError::WeightCount {
                what: "edge",
                expected: graph.edge_count(),
                found: edge_weights.len(),
            });
        }
        if let Some(v) = vertex_weights.iter().position(|w| !w.is_admissible()) {
            return Err(GraphError::InvalidVertexWeight(v));
        }
        if let Some(e) = edge_weights.iter().position(|w| !w.is_admissible()) {
            return Err(GraphError::InvalidEdgeWeight(e));
        }
        Ok(Self {
            graph,
            vertex_weights,
            edge_weights,
        })
    }

    /// All weights equal to one: the plain Mostar setting.
    pub fn unit(graph: Graph) -> Self {
        let vertex_weights = vec![W::ONE; graph.vertex_count()];
        let edge_weights = vec![W::ONE; graph.edge_count()];
        Self {
            graph,
            vertex_weights,
            edge_weights,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertex_weights(&self) -> &[W] {
        &self.vertex_weights
    }

    pub fn edge_weights(&self) -> &[W] {
        &self.edge_weights
    }

    pub fn total_vertex_weight(&self) -> W {
        self.vertex_weights.iter().copied().sum()
    }

    /// Multiplies every vertex weight by `c`.
    pub fn scale_vertex_weights(&self, c: W) -> Self {
        Self {
            graph: self.graph.clone(),
            vertex_weights: self.vertex_weights.iter().map(|&w| w * c).collect(),
            edge_weights: self.edge_weights.clone(),
        }
    }

    /// Multiplies every edge weight by `c`.
    pub fn scale_edge_weights(&self, c: W) -> Self {
        Self {
            graph: self.graph.clone(),
            vertex_weights: self.vertex_weights.clone(),
            edge_weights: self.edge_weights.iter().map(|&w| w * c).collect(),
        }
    }

    pub fn into_parts(self) -> (Graph, Vec<W>, Vec<W>) {
        (self.graph, self.vertex_weights, self.edge_weights)
    }
}
