//! The cut method: build the quotient graph of every class of a c-partition
//! and add up the weighted indices of the quotients.
//!
//! ```text
//! cargo run --example cut_method
//! ```

use mostar::format::parse_graph;
use mostar::quotient::build_quotient;
use mostar::theta::EdgePartition;
use mostar::{mostar_by_cut, mostar_direct, theta_star_partition, WeightedGraph};

fn main() {
    let patch = parse_graph(include_str!("../data/fullerene_patch.graph")).unwrap();
    let wg = WeightedGraph::<u64>::unit(patch.graph().clone());
    let star = theta_star_partition(wg.graph());

    println!("Θ* partition, one quotient per class:");
    for class in star.classes() {
        let q = build_quotient(&wg, class);
        println!(
            "  {} edges -> quotient with {} vertices, λ = {:?}, λ′ = {:?}",
            class.len(),
            q.base().vertex_count(),
            q.lambda(),
            q.lambda_prime()
        );
    }
    let report = mostar_by_cut(&wg, &star).unwrap();
    println!("cut method over Θ*: {}", report.total);
    println!("direct:             {}", mostar_direct(&wg).total);

    // any coarser partition works too; here the largest class against the rest
    let largest = (0..star.len())
        .max_by_key(|&i| star.class(i).len())
        .unwrap();
    let groups: Vec<usize> = (0..star.len()).map(|i| usize::from(i != largest)).collect();
    let two = star.coarsen(&groups);
    let report = mostar_by_cut(&wg, &two).unwrap();
    print!("{}", report.render_text(false, None));

    // a partition finer than Θ* is rejected
    let m = wg.graph().edge_count();
    let finer = EdgePartition::new(m, (0..m).map(|e| vec![e]).collect()).unwrap();
    match mostar_by_cut(&wg, &finer) {
        Ok(_) => println!("singletons accepted"),
        Err(err) => println!("singletons rejected: {err}"),
    }
}
