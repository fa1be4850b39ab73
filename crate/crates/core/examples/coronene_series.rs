//! Coronenes `G_h` against the closed form `27h⁴ − 18h³ − 9h²`, and the
//! speed of the tree pipeline against the direct sweep.
//!
//! ```text
//! cargo run --release --example coronene_series
//! ```

use std::time::Instant;

use mostar::benzenoid::{build_benzenoid, coronene, coronene_closed_form, mostar_benzenoid};
use mostar::mostar_direct;

fn main() {
    println!("h\thexagons\tvertices\tMo\tclosed form\tpipeline\tdirect");
    for h in [1, 2, 3, 4, 5, 6, 10, 20, 30] {
        let spec = coronene(h).unwrap();
        let bg = build_benzenoid(&spec);

        let start = Instant::now();
        let total = mostar_benzenoid(&bg).unwrap().total;
        let fast = start.elapsed();

        let start = Instant::now();
        let direct = mostar_direct(&bg.unit_weighted()).total;
        let slow = start.elapsed();
        assert_eq!(total, direct);

        println!(
            "{h}\t{}\t{}\t{total}\t{}\t{fast:?}\t{slow:?}",
            spec.len(),
            bg.graph().vertex_count(),
            coronene_closed_form(h).unwrap()
        );
    }
}
