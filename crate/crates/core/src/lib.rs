//! Mostar index of connected graphs.
//!
//! The Mostar index sums, over all edges `uv`, the imbalance
//! `|n_u − n_v|` between the vertices closer to `u` and those closer to `v`.
//! This crate computes it three ways:
//!
//! * [`mostar::mostar_direct`] from the definition, for vertex- and
//!   edge-weighted graphs;
//! * [`mostar::mostar_by_cut`], summing the indices of weighted quotient
//!   graphs `G/F_i` over a partition coarser than the Θ*-partition;
//! * [`benzenoid::mostar_benzenoid`] for benzenoid systems given as sets of
//!   hexagonal cells, where the three direction classes give three weighted
//!   quotient trees, each handled in linear time by
//!   [`mostar::mostar_tree_linear`].
//!
//! ```
//! use mostar::benzenoid::{build_benzenoid, coronene, coronene_closed_form, mostar_benzenoid};
//!
//! let bg = build_benzenoid(&coronene(3).unwrap());
//! let report = mostar_benzenoid(&bg).unwrap();
//! assert_eq!(report.total, 1620);
//! assert_eq!(report.total, coronene_closed_form(3).unwrap());
//! ```

pub mod benzenoid;
pub mod cli;
pub mod format;
pub mod graph;
pub mod mostar;
pub mod quotient;
pub mod theta;
mod union_find;
pub mod weight;

pub use graph::{Graph, GraphError, WeightedGraph};
pub use mostar::{mostar_by_cut, mostar_direct, mostar_tree_linear, MostarError, MostarReport};
pub use theta::{theta_star_partition, EdgePartition};
pub use weight::Weight;
