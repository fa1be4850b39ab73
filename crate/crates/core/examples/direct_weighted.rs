//! Weighted Mostar index straight from the definition, with the per-edge
//! terms `w′(e) · |n_u − n_v|`.
//!
//! ```text
//! cargo run --example direct_weighted
//! ```

use mostar::{mostar_direct, Graph, WeightedGraph};

fn main() {
    // a triangle with a pendant path: 0-1-2-0, 2-3, 3-4
    let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).expect("valid graph");

    let unit = WeightedGraph::<u64>::unit(g.clone());
    let report = mostar_direct(&unit);
    println!("unweighted: Mo = {}", report.total);

    let weighted =
        WeightedGraph::new(g, vec![1, 1, 2, 3, 5], vec![1, 1, 1, 2, 4]).expect("valid weights");
    let report = mostar_direct(&weighted);
    println!("weighted:   Mo = {}", report.total);
    print!(
        "{}",
        report.render_text(true, Some(weighted.graph().edges()))
    );

    let fractional = WeightedGraph::new(
        weighted.graph().clone(),
        vec![0.5, 0.5, 1.0, 1.5, 2.5],
        vec![1.0, 1.0, 1.0, 2.0, 4.0],
    )
    .expect("valid weights");
    println!(
        "halved vertex weights: Mo = {}",
        mostar_direct(&fractional).total
    );
}
