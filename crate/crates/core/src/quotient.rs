//! Weighted quotient graphs `G/F`.
//!
//! The vertices of `G/F` are the connected components of `G ∖ F`; two
//! components are adjacent when some edge of `G` joins them. Component
//! weights add up the vertex weights inside, and each quotient edge carries
//! the total weight of its fiber (the original edges between the two
//! components).

use std::collections::HashMap;

use crate::graph::{EdgeId, Graph, VertexId, WeightedGraph};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq)]
pub struct QuotientGraph<W> {
    weighted: WeightedGraph<W>,
    ell: Vec<VertexId>,
    fibers: Vec<Vec<EdgeId>>,
    loops: Vec<EdgeId>,
}

impl<W: Weight> QuotientGraph<W> {
    /// The quotient simple graph.
    pub fn base(&self) -> &Graph {
        self.weighted.graph()
    }

    /// The quotient with component weights and fiber weights attached.
    pub fn weighted(&self) -> &WeightedGraph<W> {
        &self.weighted
    }

    /// Component weight per quotient vertex.
    pub fn lambda(&self) -> &[W] {
        self.weighted.vertex_weights()
    }

    /// Fiber weight per quotient edge.
    pub fn lambda_prime(&self) -> &[W] {
        self.weighted.edge_weights()
    }

    /// Quotient vertex containing original vertex `v`.
    pub fn project(&self, v: VertexId) -> VertexId {
        self.ell[v]
    }

    pub fn projection(&self) -> &[VertexId] {
        &self.ell
    }

    pub fn fiber(&self, quotient_edge: EdgeId) -> &[EdgeId] {
        &self.fibers[quotient_edge]
    }

    pub fn fibers(&self) -> &[Vec<EdgeId>] {
        &self.fibers
    }

    /// Class edges whose endpoints fell into the same component. Always empty
    /// when the class is a union of Θ*-classes.
    pub fn loops(&self) -> &[EdgeId] {
        &self.loops
    }

    pub fn into_weighted(self) -> WeightedGraph<W> {
        self.weighted
    }
}

/// Contracts `wg` along every edge outside `class_edges`.
///
/// Quotient vertex ids follow the smallest original vertex of each component;
/// quotient edge ids follow the smallest original edge of each fiber.
pub fn build_quotient<W: Weight>(
    wg: &WeightedGraph<W>,
    class_edges: &[EdgeId],
) -> QuotientGraph<W> {
    let g = wg.graph();
    let mut in_class = vec![false; g.edge_count()];
    for &e in class_edges {
        in_class[e] = true;
    }
    let comps = g.components_without(&in_class);

    let mut lambda = vec![W::ZERO; comps.count];
    for (v, &label) in comps.labels.iter().enumerate() {
        lambda[label] += wg.vertex_weights()[v];
    }

    let mut index: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
    let mut pairs = Vec::new();
    let mut fibers: Vec<Vec<EdgeId>> = Vec::new();
    let mut loops = Vec::new();
    for e in (0..g.edge_count()).filter(|&e| in_class[e]) {
        let (u, v) = g.endpoints(e);
        let (x, y) = (comps.labels[u], comps.labels[v]);
        if x == y {
            loops.push(e);
            continue;
        }
        let id = *index.entry((x.min(y), x.max(y))).or_insert_with(|| {
            pairs.push((x, y));
            fibers.push(Vec::new());
            pairs.len() - 1
        });
        fibers[id].push(e);
    }
    let lambda_prime: Vec<W> = fibers
        .iter()
        .map(|fiber| fiber.iter().map(|&e| wg.edge_weights()[e]).sum())
        .collect();

    let base = Graph::new(comps.count, pairs)
        .expect("a quotient of a connected graph is a connected simple graph");
    let weighted =
        WeightedGraph::new(base, lambda, lambda_prime).expect("aggregated weights stay admissible");
    QuotientGraph {
        weighted,
        ell: comps.labels,
        fibers,
        loops,
    }
}
