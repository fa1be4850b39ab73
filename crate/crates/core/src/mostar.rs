//! Weighted Mostar index: directly from the definition, through the cut
//! method over a c-partition, and in linear time on weighted trees.
//!
//! For a weighted graph `(G, w, w′)`,
//!
//! ```text
//! Mo(G, w, w′) = Σ_{e = uv} w′(e) · |n_u(e) − n_v(e)|
//! ```
//!
//! where `n_u(e)` sums `w` over the vertices strictly closer to `u` than to
//! `v`. For any partition `{F_1, …, F_k}` coarser than Θ*, the index splits
//! into `Σ_i Mo(G/F_i, λ_i, λ′_i)`, which is what [`mostar_by_cut`] computes.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, VertexId, WeightedGraph, UNREACHED};
use crate::quotient::{build_quotient, QuotientGraph};
use crate::theta::{theta_star_partition, EdgePartition, PartitionError};
use crate::weight::Weight;

/// Sources handled per work item in the direct sweep. Fixed so that
/// floating-point sums do not depend on the thread count.
const SOURCE_CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MostarError {
    #[error(
        "partition is not coarser than Θ*: the Θ*-class of edge {edge} meets partition classes {first} and {second}"
    )]
    NotCPartition {
        edge: EdgeId,
        first: usize,
        second: usize,
    },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("graph is not a tree: {vertices} vertices, {edges} edges")]
    NotATree { vertices: usize, edges: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Direct,
    Cut,
    TreeLinear,
    Benzenoid,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Direct => "direct",
            Method::Cut => "cut",
            Method::TreeLinear => "tree-linear",
            Method::Benzenoid => "benzenoid",
        })
    }
}

/// One summand `Mo(G/F_i, λ_i, λ′_i)` of the cut method.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassContribution<W> {
    pub class: usize,
    pub class_size: usize,
    pub quotient_vertices: usize,
    pub quotient_edges: usize,
    pub tree: bool,
    pub mostar: W,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MostarReport<W> {
    pub method: Method,
    pub total: W,
    pub per_class: Vec<ClassContribution<W>>,
    /// `w′(e) · |n_u(e) − n_v(e)|` indexed by edge id, when computed.
    pub per_edge: Option<Vec<W>>,
}

impl<W: Weight> MostarReport<W> {
    /// Summands of the cut method in class order.
    pub fn class_totals(&self) -> Vec<W> {
        self.per_class.iter().map(|c| c.mostar).collect()
    }

    pub fn render_text(&self, with_edges: bool, edges: Option<&[(usize, usize)]>) -> String {
        use fmt::Write;
        let mut out = String::new();
        writeln!(out, "method: {}", self.method).unwrap();
        writeln!(out, "total: {}", self.total).unwrap();
        if !self.per_class.is_empty() {
            writeln!(out, "classes: {}", self.per_class.len()).unwrap();
            writeln!(out, "class\tsize\tq_vertices\tq_edges\ttree\tmostar").unwrap();
            for c in &self.per_class {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    c.class, c.class_size, c.quotient_vertices, c.quotient_edges, c.tree, c.mostar
                )
                .unwrap();
            }
        }
        if with_edges {
            if let Some(per_edge) = &self.per_edge {
                writeln!(out, "edge\tu\tv\tcontribution").unwrap();
                for (e, value) in per_edge.iter().enumerate() {
                    match edges {
                        Some(edges) => {
                            writeln!(out, "{}\t{}\t{}\t{}", e, edges[e].0, edges[e].1, value)
                        }
                        None => writeln!(out, "{}\t-\t-\t{}", e, value),
                    }
                    .unwrap();
                }
            }
        }
        out
    }
}

/// `(n_u(e), n_v(e))` for every edge, from one BFS per source vertex.
///
/// Every source `x` is added to the side of each edge whose endpoint it is
/// strictly closer to, which gives exactly the sets of
/// [`Graph::edge_split`](crate::graph::Graph::edge_split).
pub fn edge_side_weights<W: Weight>(wg: &WeightedGraph<W>) -> (Vec<W>, Vec<W>) {
    let g = wg.graph();
    let (n, m) = (g.vertex_count(), g.edge_count());
    let w = wg.vertex_weights();
    let starts: Vec<usize> = (0..n).step_by(SOURCE_CHUNK).collect();
    let partials: Vec<(Vec<W>, Vec<W>)> = starts
        .into_par_iter()
        .map(|start| {
            let mut near_u = vec![W::ZERO; m];
            let mut near_v = vec![W::ZERO; m];
            let mut dist = vec![UNREACHED; n];
            let mut queue = VecDeque::with_capacity(n);
            for (x, &wx) in w.iter().enumerate().skip(start).take(SOURCE_CHUNK) {
                if wx == W::ZERO {
                    continue;
                }
                g.bfs_into(x, &mut dist, &mut queue);
                for (e, &(u, v)) in g.edges().iter().enumerate() {
                    let (du, dv) = (dist[u], dist[v]);
                    if du < dv {
                        near_u[e] += wx;
                    } else if dv < du {
                        near_v[e] += wx;
                    }
                }
            }
            (near_u, near_v)
        })
        .collect();

    let mut near_u = vec![W::ZERO; m];
    let mut near_v = vec![W::ZERO; m];
    for (pu, pv) in partials {
        for e in 0..m {
            near_u[e] += pu[e];
            near_v[e] += pv[e];
        }
    }
    (near_u, near_v)
}

/// `Mo(G, w, w′)` straight from the definition.
pub fn mostar_direct<W: Weight>(wg: &WeightedGraph<W>) -> MostarReport<W> {
    let (near_u, near_v) = edge_side_weights(wg);
    let per_edge: Vec<W> = wg
        .edge_weights()
        .iter()
        .zip(near_u.iter().zip(&near_v))
        .map(|(&we, (&a, &b))| we * a.abs_diff(b))
        .collect();
    MostarReport {
        method: Method::Direct,
        total: per_edge.iter().copied().sum(),
        per_class: Vec::new(),
        per_edge: Some(per_edge),
    }
}

/// `Mo(T, w, w′)` for a weighted tree in one traversal.
///
/// Rooting at vertex 0, the edge from parent `p` to child `c` splits the tree
/// into the subtree of `c` (weight `s(c)`) and the rest, so its term is
/// `w′(e) · |W − 2 s(c)|`.
pub fn mostar_tree_linear<W: Weight>(
    wt: &WeightedGraph<W>,
) -> Result<MostarReport<W>, MostarError> {
    let g = wt.graph();
    let n = g.vertex_count();
    if !g.is_tree() {
        return Err(MostarError::NotATree {
            vertices: n,
            edges: g.edge_count(),
        });
    }
    // BFS from vertex 0; everything below is indexed by BFS position, and
    // parent positions are non-decreasing along the order
    let mut visited = vec![false; n];
    let mut order: Vec<(VertexId, usize, EdgeId)> = Vec::with_capacity(n);
    visited[0] = true;
    order.push((0, 0, usize::MAX));
    let mut head = 0;
    while head < order.len() {
        let x = order[head].0;
        for &(y, e) in g.neighbors(x) {
            if !visited[y] {
                visited[y] = true;
                order.push((y, head, e));
            }
        }
        head += 1;
    }

    let total_weight = wt.total_vertex_weight();
    let weights = wt.vertex_weights();
    let mut subtree: Vec<W> = order.iter().map(|&(v, _, _)| weights[v]).collect();
    let mut per_edge = vec![W::ZERO; g.edge_count()];
    for i in (1..n).rev() {
        let (_, parent, e) = order[i];
        let inside = subtree[i];
        let outside = total_weight.abs_diff(inside);
        per_edge[e] = wt.edge_weights()[e] * inside.abs_diff(outside);
        let acc = subtree[parent] + inside;
        subtree[parent] = acc;
    }
    Ok(MostarReport {
        method: Method::TreeLinear,
        total: per_edge.iter().copied().sum(),
        per_class: Vec::new(),
        per_edge: Some(per_edge),
    })
}

/// `Mo(G/F, λ, λ′)` for one quotient, routed to the tree algorithm when the
/// quotient is a tree.
pub fn quotient_mostar<W: Weight>(q: &QuotientGraph<W>) -> W {
    match mostar_tree_linear(q.weighted()) {
        Ok(report) => report.total,
        Err(_) => mostar_direct(q.weighted()).total,
    }
}

/// Checks that `partition` is coarser than the Θ*-partition of `wg`.
pub fn validate_c_partition<W: Weight>(
    wg: &WeightedGraph<W>,
    partition: &EdgePartition,
) -> Result<(), MostarError> {
    let g = wg.graph();
    if partition.edge_count() != g.edge_count() {
        return Err(PartitionError::EdgeCountMismatch {
            expected: g.edge_count(),
            found: partition.edge_count(),
        }
        .into());
    }
    let star = theta_star_partition(g);
    for class in star.classes() {
        let first = partition.class_of(class[0]);
        if let Some(&e) = class.iter().find(|&&e| partition.class_of(e) != first) {
            return Err(MostarError::NotCPartition {
                edge: class[0],
                first,
                second: partition.class_of(e),
            });
        }
    }
    Ok(())
}

/// `Σ_i Mo(G/F_i, λ_i, λ′_i)` after checking the c-partition hypothesis.
pub fn mostar_by_cut<W: Weight>(
    wg: &WeightedGraph<W>,
    partition: &EdgePartition,
) -> Result<MostarReport<W>, MostarError> {
    validate_c_partition(wg, partition)?;
    Ok(cut_unchecked(wg, partition))
}

/// The cut method without validation. The result equals the Mostar index
/// only when `partition` is a c-partition.
pub fn mostar_by_cut_unchecked<W: Weight>(
    wg: &WeightedGraph<W>,
    partition: &EdgePartition,
) -> Result<MostarReport<W>, MostarError> {
    if partition.edge_count() != wg.graph().edge_count() {
        return Err(PartitionError::EdgeCountMismatch {
            expected: wg.graph().edge_count(),
            found: partition.edge_count(),
        }
        .into());
    }
    Ok(cut_unchecked(wg, partition))
}

fn cut_unchecked<W: Weight>(wg: &WeightedGraph<W>, partition: &EdgePartition) -> MostarReport<W> {
    let per_class: Vec<ClassContribution<W>> = partition
        .classes()
        .par_iter()
        .enumerate()
        .map(|(i, class)| {
            let q = build_quotient(wg, class);
            ClassContribution {
                class: i,
                class_size: class.len(),
                quotient_vertices: q.base().vertex_count(),
                quotient_edges: q.base().edge_count(),
                tree: q.base().is_tree(),
                mostar: quotient_mostar(&q),
            }
        })
        .collect();
    MostarReport {
        method: Method::Cut,
        total: per_class.iter().map(|c| c.mostar).sum(),
        per_class,
        per_edge: None,
    }
}
