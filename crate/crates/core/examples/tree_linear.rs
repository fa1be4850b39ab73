//! Linear-time index of a weighted tree, checked against the direct sweep on
//! a small tree and timed on a large one.
//!
//! ```text
//! cargo run --release --example tree_linear
//! ```

use std::time::Instant;

use mostar::{mostar_direct, mostar_tree_linear, Graph, WeightedGraph};

/// Complete binary tree on `n` vertices with heap numbering.
fn binary_tree(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| ((v - 1) / 2, v))).unwrap()
}

fn main() {
    let small = binary_tree(31);
    let w: Vec<u64> = (0..31).map(|v| 1 + v % 3).collect();
    let we: Vec<u64> = (0..30).map(|e| 1 + e % 2).collect();
    let wt = WeightedGraph::new(small, w, we).unwrap();
    let linear = mostar_tree_linear(&wt).unwrap().total;
    let direct = mostar_direct(&wt).total;
    println!("31-vertex binary tree: linear {linear}, direct {direct}");

    let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    println!(
        "K1,3: {}",
        mostar_tree_linear(&WeightedGraph::<u64>::unit(star))
            .unwrap()
            .total
    );

    for n in [100_000, 200_000, 400_000] {
        let wt = WeightedGraph::<u64>::unit(binary_tree(n));
        let start = Instant::now();
        let total = mostar_tree_linear(&wt).unwrap().total;
        println!("n = {n}: Mo = {total} in {:?}", start.elapsed());
    }

    let cycle = Graph::new(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
    if let Err(err) = mostar_tree_linear(&WeightedGraph::<u64>::unit(cycle)) {
        println!("4-cycle: {err}");
    }
}
