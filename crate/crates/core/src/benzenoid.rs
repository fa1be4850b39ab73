//! Benzenoid systems built from hexagonal cells.
//!
//! Cells use axial coordinates `(q, r)` on a flat-top hexagonal tiling. A cell
//! has its center at the integer point `(3q, q + 2r)` and corners at the
//! offsets below, so corners shared by neighboring cells coincide exactly and
//! deduplication is a map lookup.
//!
//! Edges fall into three direction classes. Each class is a union of
//! elementary cuts (the Θ-classes of a benzenoid), so `{F_0, F_1, F_2}` is a
//! c-partition and each quotient `G/F_d` is a tree.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId, WeightedGraph};
use crate::mostar::{mostar_tree_linear, ClassContribution, Method, MostarReport};
use crate::quotient::{build_quotient, QuotientGraph};
use crate::theta::EdgePartition;
use crate::union_find::DisjointSet;

/// Corner offsets from a cell center, counter-clockwise from the east corner.
pub const CORNER_OFFSETS: [(i32, i32); 6] = [(2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1)];

/// Axial offsets of the six neighboring cells.
pub const CELL_NEIGHBORS: [(i32, i32); 6] = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BenzenoidError {
    #[error("benzenoid has no cells")]
    EmptySpec,
    #[error("cell {0} is not connected to the rest of the cells")]
    DisconnectedCells(Axial),
    #[error("coronene order must be at least 1, got {0}")]
    NonPositiveH(u32),
    #[error("quotient by {0} edges is not a tree (the cell set has a hole)")]
    QuotientNotTree(Direction),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Axial {
    pub q: i32,
    pub r: i32,
}

impl Axial {
    pub const fn new(q: i32, r: i32) -> Self {
        Self { q, r }
    }

    pub fn center(self) -> (i32, i32) {
        (3 * self.q, self.q + 2 * self.r)
    }

    pub fn corners(self) -> [(i32, i32); 6] {
        let (cx, cy) = self.center();
        CORNER_OFFSETS.map(|(dx, dy)| (cx + dx, cy + dy))
    }

    pub fn neighbors(self) -> impl Iterator<Item = Axial> {
        CELL_NEIGHBORS
            .into_iter()
            .map(move |(dq, dr)| Axial::new(self.q + dq, self.r + dr))
    }

    /// Hex distance from the origin cell.
    pub fn radius(self) -> i32 {
        self.q.abs().max(self.r.abs()).max((self.q + self.r).abs())
    }
}

impl fmt::Display for Axial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.q, self.r)
    }
}

/// Edge orientation on the lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    /// Corner delta `(±2, 0)`.
    Horizontal,
    /// Corner delta with equal signs, `(1, 1)` or `(-1, -1)`.
    Rising,
    /// Corner delta with opposite signs.
    Falling,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::Horizontal, Direction::Rising, Direction::Falling];

    pub fn index(self) -> usize {
        self as usize
    }

    fn from_delta(dx: i32, dy: i32) -> Self {
        if dy == 0 {
            Direction::Horizontal
        } else if dx.signum() == dy.signum() {
            Direction::Rising
        } else {
            Direction::Falling
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Horizontal => "horizontal",
            Direction::Rising => "rising",
            Direction::Falling => "falling",
        })
    }
}

/// A finite, nonempty, edge-connected set of hexagonal cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenzenoidSpec {
    cells: BTreeSet<Axial>,
}

impl BenzenoidSpec {
    pub fn new<I: IntoIterator<Item = Axial>>(cells: I) -> Result<Self, BenzenoidError> {
        let cells: BTreeSet<Axial> = cells.into_iter().collect();
        let Some(&first) = cells.first() else {
            return Err(BenzenoidError::EmptySpec);
        };
        let mut seen = BTreeSet::from([first]);
        let mut queue = VecDeque::from([first]);
        while let Some(c) = queue.pop_front() {
            for nb in c.neighbors() {
                if cells.contains(&nb) && seen.insert(nb) {
                    queue.push_back(nb);
                }
            }
        }
        if let Some(&lost) = cells.iter().find(|c| !seen.contains(c)) {
            return Err(BenzenoidError::DisconnectedCells(lost));
        }
        Ok(Self { cells })
    }

    pub fn cells(&self) -> impl Iterator<Item = Axial> + '_ {
        self.cells.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// The molecular graph of a benzenoid together with its lattice geometry.
#[derive(Debug, Clone)]
pub struct BenzenoidGraph {
    graph: Graph,
    direction: Vec<Direction>,
    corners: Vec<(i32, i32)>,
    cells: Vec<Axial>,
    faces: Vec<Axial>,
    cell_edges: Vec<[EdgeId; 6]>,
    boundary_length: usize,
}

impl BenzenoidGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The graph with all weights one.
    pub fn unit_weighted(&self) -> WeightedGraph<u64> {
        WeightedGraph::unit(self.graph.clone())
    }

    pub fn direction(&self, e: EdgeId) -> Direction {
        self.direction[e]
    }

    pub fn directions(&self) -> &[Direction] {
        &self.direction
    }

    /// Lattice position of a vertex.
    pub fn corner(&self, v: VertexId) -> (i32, i32) {
        self.corners[v]
    }

    pub fn cells(&self) -> &[Axial] {
        &self.cells
    }

    /// Hexagonal faces of the graph: the listed cells, then any unlisted cell
    /// enclosed on all six sides.
    pub fn faces(&self) -> &[Axial] {
        &self.faces
    }

    /// Edge ids of each face in corner order, aligned with [`faces`](Self::faces).
    pub fn cell_edges(&self) -> &[[EdgeId; 6]] {
        &self.cell_edges
    }

    /// Number of edges lying on exactly one hexagonal face.
    pub fn boundary_length(&self) -> usize {
        self.boundary_length
    }

    pub fn edges_in_direction(&self, d: Direction) -> Vec<EdgeId> {
        (0..self.direction.len())
            .filter(|&e| self.direction[e] == d)
            .collect()
    }
}

/// Molecular graph of `spec`. Vertices are ordered lexicographically by
/// lattice position and edges lexicographically by endpoint ids.
pub fn build_benzenoid(spec: &BenzenoidSpec) -> BenzenoidGraph {
    let cells: Vec<Axial> = spec.cells().collect();
    let mut corner_set: Vec<(i32, i32)> = cells.iter().flat_map(|c| c.corners()).collect();
    corner_set.sort_unstable();
    corner_set.dedup();
    let vertex_of: HashMap<(i32, i32), VertexId> = corner_set
        .iter()
        .enumerate()
        .map(|(i, &p)| (p, i))
        .collect();

    // endpoint pair -> direction
    let mut edge_info: BTreeMap<(VertexId, VertexId), Direction> = BTreeMap::new();
    for cell in &cells {
        let pts = cell.corners();
        for i in 0..6 {
            let (a, b) = (pts[i], pts[(i + 1) % 6]);
            let (u, v) = (vertex_of[&a], vertex_of[&b]);
            let dir = Direction::from_delta(b.0 - a.0, b.1 - a.1);
            edge_info.entry((u.min(v), u.max(v))).or_insert(dir);
        }
    }
    let edge_id: HashMap<(VertexId, VertexId), EdgeId> =
        edge_info.keys().enumerate().map(|(i, &k)| (k, i)).collect();
    let direction = edge_info.values().copied().collect();

    // Faces: the listed cells plus any unlisted cell whose six edges all exist
    // (a one-hexagon gap is a face of the graph, not a hole).
    let edge_of = |cell: &Axial| -> Option<[EdgeId; 6]> {
        let pts = cell.corners();
        let mut ids = [0; 6];
        for i in 0..6 {
            let u = *vertex_of.get(&pts[i])?;
            let v = *vertex_of.get(&pts[(i + 1) % 6])?;
            ids[i] = *edge_id.get(&(u.min(v), u.max(v)))?;
        }
        Some(ids)
    };
    let listed: BTreeSet<Axial> = cells.iter().copied().collect();
    let implied: BTreeSet<Axial> = cells
        .iter()
        .flat_map(|c| c.neighbors())
        .filter(|c| !listed.contains(c) && edge_of(c).is_some())
        .collect();
    let mut faces = cells.clone();
    faces.extend(implied);
    let cell_edges: Vec<[EdgeId; 6]> = faces
        .iter()
        .map(|face| edge_of(face).expect("every face has its six edges"))
        .collect();
    let mut face_count = vec![0u8; edge_id.len()];
    for &e in cell_edges.iter().flatten() {
        face_count[e] += 1;
    }
    let boundary_length = face_count.iter().filter(|&&c| c == 1).count();

    let graph = Graph::new(corner_set.len(), edge_info.into_keys())
        .expect("edge-connected cells give a connected simple graph");
    BenzenoidGraph {
        graph,
        direction,
        corners: corner_set,
        cells,
        faces,
        cell_edges,
        boundary_length,
    }
}

/// The three direction classes, in [`Direction::ALL`] order.
pub fn direction_partition(bg: &BenzenoidGraph) -> EdgePartition {
    let classes = Direction::ALL
        .iter()
        .map(|&d| bg.edges_in_direction(d))
        .collect();
    EdgePartition::new(bg.graph.edge_count(), classes)
        .expect("every edge has exactly one direction")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryCut {
    pub direction: Direction,
    pub edges: Vec<EdgeId>,
}

/// Elementary cuts: opposite edges of every hexagonal face, closed
/// transitively.
/// Ordered by smallest edge id.
pub fn elementary_cuts(bg: &BenzenoidGraph) -> Vec<ElementaryCut> {
    let mut sets = DisjointSet::new(bg.graph.edge_count());
    for edges in &bg.cell_edges {
        for i in 0..3 {
            sets.union(edges[i], edges[i + 3]);
        }
    }
    EdgePartition::from_labels(&sets.roots())
        .classes()
        .iter()
        .map(|edges| ElementaryCut {
            direction: bg.direction[edges[0]],
            edges: edges.clone(),
        })
        .collect()
}

/// The weighted quotient trees `(T_d, λ_d, λ′_d)` for the three directions.
pub fn quotient_trees(bg: &BenzenoidGraph) -> Result<[QuotientGraph<u64>; 3], BenzenoidError> {
    let unit = bg.unit_weighted();
    let build = |d: Direction| {
        let q = build_quotient(&unit, &bg.edges_in_direction(d));
        if q.base().is_tree() && q.loops().is_empty() {
            Ok(q)
        } else {
            Err(BenzenoidError::QuotientNotTree(d))
        }
    };
    Ok([
        build(Direction::Horizontal)?,
        build(Direction::Rising)?,
        build(Direction::Falling)?,
    ])
}

/// The Mostar index as the sum over the three weighted quotient trees.
pub fn mostar_benzenoid(bg: &BenzenoidGraph) -> Result<MostarReport<u64>, BenzenoidError> {
    let trees = quotient_trees(bg)?;
    let per_class: Vec<ClassContribution<u64>> = trees
        .iter()
        .zip(Direction::ALL)
        .map(|(tree, d)| {
            let mostar = mostar_tree_linear(tree.weighted())
                .expect("quotient_trees only returns trees")
                .total;
            ClassContribution {
                class: d.index(),
                class_size: tree.fibers().iter().map(Vec::len).sum(),
                quotient_vertices: tree.base().vertex_count(),
                quotient_edges: tree.base().edge_count(),
                tree: true,
                mostar,
            }
        })
        .collect();
    Ok(MostarReport {
        method: Method::Benzenoid,
        total: per_class.iter().map(|c| c.mostar).sum(),
        per_class,
        per_edge: None,
    })
}

/// Coronene `G_h`: the hexagonal flower of cells within hex radius `h − 1`.
pub fn coronene(h: u32) -> Result<BenzenoidSpec, BenzenoidError> {
    if h == 0 {
        return Err(BenzenoidError::NonPositiveH(h));
    }
    let radius = h as i32 - 1;
    let cells = (-radius..=radius)
        .flat_map(|q| (-radius..=radius).map(move |r| Axial::new(q, r)))
        .filter(|c| c.radius() <= radius);
    BenzenoidSpec::new(cells)
}

/// `27h⁴ − 18h³ − 9h²`, evaluated as `9h²(h − 1)(3h + 1)`.
pub fn coronene_closed_form(h: u32) -> Result<u64, BenzenoidError> {
    if h == 0 {
        return Err(BenzenoidError::NonPositiveH(h));
    }
    let h = u64::from(h);
    Ok(9 * h * h * (h - 1) * (3 * h + 1))
}

/// Each of the three equal coronene tree summands, `9h⁴ − 6h³ − 3h²`.
pub fn coronene_tree_closed_form(h: u32) -> Result<u64, BenzenoidError> {
    coronene_closed_form(h).map(|total| total / 3)
}
