//! Θ* classes of a graph and whether Θ is already transitive.
//!
//! On a partial cube such as the hexagon every Θ-class is a cut that leaves
//! two halves; on the fullerene patch (a pentagon ringed by five hexagons)
//! Θ is not transitive and the closure merges the pentagon with part of the
//! rim.
//!
//! ```text
//! cargo run --example theta_classes
//! ```

use mostar::format::parse_graph;
use mostar::theta::{theta_is_transitive, theta_pair_count, theta_star_partition};
use mostar::Graph;

fn describe(name: &str, g: &Graph) {
    let dist = g.distance_table();
    let star = theta_star_partition(g);
    println!(
        "{name}: {} vertices, {} edges, {} related pairs, {} Θ* classes, Θ transitive: {}",
        g.vertex_count(),
        g.edge_count(),
        theta_pair_count(g, &dist),
        star.len(),
        theta_is_transitive(g, &dist, &star)
    );
    for (i, class) in star.classes().iter().enumerate() {
        let edges: Vec<String> = class
            .iter()
            .map(|&e| {
                let (u, v) = g.endpoints(e);
                format!("{u}-{v}")
            })
            .collect();
        let parts = g.components_after_removal(class).count;
        println!(
            "  class {i}: {} ({parts} components after removal)",
            edges.join(" ")
        );
    }
}

fn main() {
    let hexagon = Graph::new(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
    describe("hexagon", &hexagon);

    let patch = parse_graph(include_str!("../data/fullerene_patch.graph")).unwrap();
    describe("fullerene patch", patch.graph());
}
