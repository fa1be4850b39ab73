//! The Djoković–Winkler relation Θ, its transitive closure Θ*, and edge
//! partitions coarser than Θ* (c-partitions).
//!
//! Edges `e = xy` and `f = ab` are Θ-related when
//! `d(x,a) + d(y,b) != d(x,b) + d(y,a)`. The relation is reflexive and
//! symmetric but not transitive in general (odd cycles), so the closure is
//! taken with a disjoint-set forest over all related pairs.

use thiserror::Error;

use crate::graph::{DistanceTable, EdgeId, Graph};
use crate::union_find::DisjointSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("partition class {0} is empty")]
    EmptyClass(usize),
    #[error("edge {edge} is outside 0..{edge_count}")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },
    #[error("edge {edge} appears in classes {first} and {second}")]
    Overlap {
        edge: EdgeId,
        first: usize,
        second: usize,
    },
    #[error("edge {0} is not covered by any class")]
    Uncovered(EdgeId),
    #[error("partition covers {found} edges but the graph has {expected}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Disjoint nonempty edge classes covering every edge id `0..m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePartition {
    classes: Vec<Vec<EdgeId>>,
    class_of: Vec<usize>,
}

impl EdgePartition {
    /// Validates `classes` as a partition of `0..edge_count`. Class order is
    /// kept; edges inside a class are sorted.
    pub fn new(edge_count: usize, mut classes: Vec<Vec<EdgeId>>) -> Result<Self, PartitionError> {
        const NONE: usize = usize::MAX;
        let mut class_of = vec![NONE; edge_count];
        for (i, class) in classes.iter_mut().enumerate() {
            if class.is_empty() {
                return Err(PartitionError::EmptyClass(i));
            }
            class.sort_unstable();
            for &edge in class.iter() {
                if edge >= edge_count {
                    return Err(PartitionError::EdgeOutOfRange { edge, edge_count });
                }
                if class_of[edge] != NONE {
                    return Err(PartitionError::Overlap {
                        edge,
                        first: class_of[edge],
                        second: i,
                    });
                }
                class_of[edge] = i;
            }
        }
        if let Some(edge) = class_of.iter().position(|&c| c == NONE) {
            return Err(PartitionError::Uncovered(edge));
        }
        Ok(Self { classes, class_of })
    }

    /// Groups edges by label; classes are ordered by their smallest edge id.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut classes: Vec<Vec<EdgeId>> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (e, l) in labels.iter().enumerate() {
            let c = *index.entry(l).or_insert_with(|| {
                classes.push(Vec::new());
                classes.len() - 1
            });
            classes[c].push(e);
            class_of.push(c);
        }
        Self { classes, class_of }
    }

    /// The single class `{E(G)}`.
    pub fn trivial(edge_count: usize) -> Self {
        Self::from_labels(&vec![0; edge_count])
    }

    pub fn classes(&self) -> &[Vec<EdgeId>] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &[EdgeId] {
        &self.classes[i]
    }

    pub fn class_of(&self, e: EdgeId) -> usize {
        self.class_of[e]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.class_of.len()
    }

    /// True when every class of `self` lies inside one class of `coarser`.
    pub fn refines(&self, coarser: &EdgePartition) -> bool {
        self.edge_count() == coarser.edge_count()
            && self.classes.iter().all(|class| {
                let target = coarser.class_of(class[0]);
                class.iter().all(|&e| coarser.class_of(e) == target)
            })
    }

    /// Merges classes: class `i` goes to group `groups[i]`.
    pub fn coarsen(&self, groups: &[usize]) -> Self {
        let labels: Vec<usize> = self.class_of.iter().map(|&c| groups[c]).collect();
        Self::from_labels(&labels)
    }
}

/// Whether `e` and `f` are in relation Θ, using precomputed distances.
pub fn theta_related(g: &Graph, dist: &DistanceTable, e: EdgeId, f: EdgeId) -> bool {
    let (x, y) = g.endpoints(e);
    let (a, b) = g.endpoints(f);
    dist.get(x, a) + dist.get(y, b) != dist.get(x, b) + dist.get(y, a)
}

/// The Θ*-partition of `E(G)`, classes ordered by smallest edge id.
pub fn theta_star_partition(g: &Graph) -> EdgePartition {
    theta_star_partition_with(g, &g.distance_table())
}

pub fn theta_star_partition_with(g: &Graph, dist: &DistanceTable) -> EdgePartition {
    let m = g.edge_count();
    let mut sets = DisjointSet::new(m);
    for e in 0..m {
        for f in e + 1..m {
            if theta_related(g, dist, e, f) {
                sets.union(e, f);
            }
        }
    }
    EdgePartition::from_labels(&sets.roots())
}

/// Number of unordered pairs `{e, f}`, `e != f`, that are Θ-related.
pub fn theta_pair_count(g: &Graph, dist: &DistanceTable) -> usize {
    let m = g.edge_count();
    (0..m)
        .map(|e| (e + 1..m).filter(|&f| theta_related(g, dist, e, f)).count())
        .sum()
}

/// True when Θ is already transitive, i.e. the closure added no pairs.
pub fn theta_is_transitive(g: &Graph, dist: &DistanceTable, star: &EdgePartition) -> bool {
    star.classes().iter().all(|class| {
        class
            .iter()
            .enumerate()
            .all(|(i, &e)| class[i + 1..].iter().all(|&f| theta_related(g, dist, e, f)))
    })
}

/// Whether `candidate` is coarser than the Θ*-partition of `g`.
pub fn is_c_partition(g: &Graph, candidate: &EdgePartition) -> Result<bool, PartitionError> {
    if candidate.edge_count() != g.edge_count() {
        return Err(PartitionError::EdgeCountMismatch {
            expected: g.edge_count(),
            found: candidate.edge_count(),
        });
    }
    Ok(theta_star_partition(g).refines(candidate))
}
