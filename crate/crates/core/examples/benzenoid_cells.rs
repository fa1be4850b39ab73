//! A benzenoid from a list of hexagon cells: build the graph, inspect the
//! three direction classes and their quotient trees, and compare the tree
//! pipeline with the direct computation.
//!
//! ```text
//! cargo run --example benzenoid_cells
//! ```

use mostar::benzenoid::{
    build_benzenoid, elementary_cuts, mostar_benzenoid, quotient_trees, Direction,
};
use mostar::format::parse_cells;
use mostar::mostar_direct;

fn main() {
    let spec = parse_cells(include_str!("../data/branched.cells")).unwrap();
    let bg = build_benzenoid(&spec);
    let g = bg.graph();
    println!(
        "{} hexagons, {} vertices, {} edges, boundary {}",
        spec.len(),
        g.vertex_count(),
        g.edge_count(),
        bg.boundary_length()
    );

    let cuts = elementary_cuts(&bg);
    let trees = quotient_trees(&bg).unwrap();
    for d in Direction::ALL {
        let tree = &trees[d.index()];
        println!(
            "{d}: {} edges, {} elementary cuts, tree on {} vertices with λ = {:?}",
            bg.edges_in_direction(d).len(),
            cuts.iter().filter(|c| c.direction == d).count(),
            tree.base().vertex_count(),
            tree.lambda()
        );
    }

    let report = mostar_benzenoid(&bg).unwrap();
    print!("{}", report.render_text(false, None));
    println!("direct: {}", mostar_direct(&bg.unit_weighted()).total);
}
