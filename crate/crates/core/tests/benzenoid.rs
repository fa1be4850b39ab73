mod common;

use common::*;
use mostar::benzenoid::{
    build_benzenoid, coronene, coronene_closed_form, coronene_tree_closed_form,
    direction_partition, elementary_cuts, mostar_benzenoid, quotient_trees, Direction,
};
use mostar::format::parse_cells;
use mostar::mostar::{mostar_by_cut, mostar_direct, mostar_tree_linear};
use mostar::theta::theta_star_partition;
use rand::rngs::StdRng;
use rand::SeedableRng;

/// `2i · Σ_{j=i}^{2h−1} (2j+1)` for the tree edge numbered `i`.
fn coronene_edge_term(h: u64, i: u64) -> u64 {
    2 * i * (i..2 * h).map(|j| 2 * j + 1).sum::<u64>()
}

#[test]
fn coronene_trees_are_paths_with_the_expected_terms() {
    for h in 1..=6u32 {
        let bg = build_benzenoid(&coronene(h).unwrap());
        for tree in quotient_trees(&bg).unwrap() {
            let base = tree.base();
            assert_eq!(base.vertex_count(), 2 * h as usize);
            assert!(base.is_tree());
            assert!((0..base.vertex_count()).all(|v| base.neighbors(v).len() <= 2));
            let report = mostar_tree_linear(tree.weighted()).unwrap();
            let mut terms: Vec<u64> = report
                .per_edge
                .unwrap()
                .into_iter()
                .filter(|&t| t > 0)
                .collect();
            terms.sort_unstable();
            let h = u64::from(h);
            let mut expected: Vec<u64> = (h + 1..2 * h)
                .flat_map(|i| [coronene_edge_term(h, i); 2])
                .collect();
            expected.sort_unstable();
            assert_eq!(terms, expected);
            assert_eq!(report.total, coronene_tree_closed_form(h as u32).unwrap());
        }
    }
}

#[test]
fn coronene_h2_tree_weights() {
    let bg = build_benzenoid(&coronene(2).unwrap());
    let trees = quotient_trees(&bg).unwrap();
    let t = &trees[Direction::Horizontal.index()];
    assert_eq!(mostar_tree_linear(t.weighted()).unwrap().total, 84);
    let mut lambda = t.lambda().to_vec();
    lambda.sort_unstable();
    assert_eq!(lambda, vec![5, 5, 7, 7]);
    let mut fibers = t.lambda_prime().to_vec();
    fibers.sort_unstable();
    assert_eq!(fibers, vec![3, 3, 4]);
}

#[test]
fn coronene_series() {
    for h in 1..=6 {
        let bg = build_benzenoid(&coronene(h).unwrap());
        let report = mostar_benzenoid(&bg).unwrap();
        assert_eq!(report.total, coronene_closed_form(h).unwrap());
        let per_tree = coronene_tree_closed_form(h).unwrap();
        assert!(report.class_totals().iter().all(|&t| t == per_tree));
        let sizes: Vec<usize> = direction_partition(&bg)
            .classes()
            .iter()
            .map(Vec::len)
            .collect();
        assert!(sizes.iter().all(|&s| s == sizes[0]));
        let cuts = elementary_cuts(&bg);
        for d in Direction::ALL {
            assert_eq!(
                cuts.iter().filter(|c| c.direction == d).count(),
                2 * h as usize - 1
            );
        }
    }
}

#[test]
fn branched_benzenoid_breakdown() {
    let bg = build_benzenoid(&parse_cells(BRANCHED_CELLS).unwrap());
    assert_eq!(bg.graph().vertex_count(), 28);
    let report = mostar_benzenoid(&bg).unwrap();
    assert_eq!(report.class_totals(), vec![112, 192, 192]);
    assert_eq!(report.total, 496);
    assert_eq!(mostar_direct(&bg.unit_weighted()).total, 496);

    // (fiber size, |n_U − n_V|) of the nonzero tree edges
    let mut pairs_by_tree = Vec::new();
    for tree in quotient_trees(&bg).unwrap() {
        let q = tree.base();
        let mut pairs: Vec<(u64, u64)> = (0..q.edge_count())
            .map(|e| {
                let (nu, nv) = q.edge_split(e).weighted_sides(tree.lambda());
                (tree.lambda_prime()[e], nu.abs_diff(nv))
            })
            .filter(|&(_, d)| d > 0)
            .collect();
        pairs.sort_unstable();
        pairs_by_tree.push(pairs);
    }
    assert_eq!(pairs_by_tree[0], vec![(4, 14), (4, 14)]);
    let slanted = vec![(2, 14), (2, 22), (2, 22), (2, 22), (4, 8)];
    assert_eq!(pairs_by_tree[1], slanted);
    assert_eq!(pairs_by_tree[2], slanted);
}

#[test]
fn random_benzenoids_structure() {
    let mut rng = StdRng::seed_from_u64(99);
    for _ in 0..50 {
        let spec = random_simple_cells(&mut rng, 10);
        let bg = build_benzenoid(&spec);
        let g = bg.graph();
        let trees = quotient_trees(&bg).unwrap();
        let tree_edges: usize = trees.iter().map(|t| t.base().edge_count()).sum();
        assert_eq!(bg.boundary_length(), 2 * tree_edges);

        let cuts = elementary_cuts(&bg);
        let star = theta_star_partition(g);
        let cut_sets: Vec<Vec<usize>> = cuts.iter().map(|c| c.edges.clone()).collect();
        assert_eq!(cut_sets, star.classes().to_vec());
        for cut in &cuts {
            assert!(cut.edges.iter().all(|&e| bg.direction(e) == cut.direction));
            assert_eq!(g.components_after_removal(&cut.edges).count, 2);
        }
        for d in Direction::ALL {
            let mut union: Vec<usize> = cuts
                .iter()
                .filter(|c| c.direction == d)
                .flat_map(|c| c.edges.clone())
                .collect();
            union.sort_unstable();
            assert_eq!(union, bg.edges_in_direction(d));
        }

        let unit = bg.unit_weighted();
        let pipeline = mostar_benzenoid(&bg).unwrap().total;
        let cut = mostar_by_cut(&unit, &star).unwrap().total;
        let direct = mostar_direct(&unit).total;
        assert_eq!((pipeline, cut), (direct, direct));
        assert_eq!(direct, oracle_mostar_weighted(&unit));
    }
}

#[test]
fn vertex_order_is_deterministic() {
    let a = build_benzenoid(&parse_cells(BRANCHED_CELLS).unwrap());
    let b = build_benzenoid(&parse_cells("2 2\n2 1\n2 0\n1 1\n0 3\n0 2\n0 1\n").unwrap());
    assert_eq!(a.graph(), b.graph());
    let corners: Vec<_> = (0..a.graph().vertex_count()).map(|v| a.corner(v)).collect();
    let mut sorted = corners.clone();
    sorted.sort();
    assert_eq!(corners, sorted);
}
