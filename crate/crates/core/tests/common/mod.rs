//! Generators and brute-force oracles shared by the integration tests.
//!
//! The oracles use Floyd–Warshall distances and evaluate the definitions
//! literally, so they share no code path with the BFS-based library.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use mostar::benzenoid::{build_benzenoid, Axial, BenzenoidSpec};
use mostar::graph::{Graph, WeightedGraph};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;

pub const BRANCHED_CELLS: &str = include_str!("../../data/branched.cells");
pub const FULLERENE_PATCH: &str = include_str!("../../data/fullerene_patch.graph");

/// Floyd–Warshall on the edge list.
pub fn floyd_warshall(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<u64>> {
    const INF: u64 = u64::MAX / 4;
    let mut d = vec![vec![INF; n]; n];
    for (i, row) in d.iter_mut().enumerate() {
        row[i] = 0;
    }
    for &(u, v) in edges {
        d[u][v] = 1;
        d[v][u] = 1;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// `Σ_e w′(e) |n_u − n_v|` evaluated literally.
pub fn oracle_mostar(n: usize, edges: &[(usize, usize)], w: &[u64], w_edge: &[u64]) -> u64 {
    let d = floyd_warshall(n, edges);
    edges
        .iter()
        .zip(w_edge)
        .map(|(&(u, v), &we)| {
            let nu: u64 = (0..n).filter(|&x| d[x][u] < d[x][v]).map(|x| w[x]).sum();
            let nv: u64 = (0..n).filter(|&x| d[x][v] < d[x][u]).map(|x| w[x]).sum();
            we * nu.abs_diff(nv)
        })
        .sum()
}

pub fn oracle_mostar_weighted(wg: &WeightedGraph<u64>) -> u64 {
    let g = wg.graph();
    oracle_mostar(
        g.vertex_count(),
        g.edges(),
        wg.vertex_weights(),
        wg.edge_weights(),
    )
}

/// Θ-relation matrix evaluated literally.
pub fn oracle_theta(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let d = floyd_warshall(n, edges);
    edges
        .iter()
        .map(|&(x, y)| {
            edges
                .iter()
                .map(|&(a, b)| d[x][a] + d[y][b] != d[x][b] + d[y][a])
                .collect()
        })
        .collect()
}

/// Random connected graph: a random spanning tree plus extra edges.
pub fn random_connected_graph(rng: &mut StdRng, max_n: usize) -> Graph {
    let n = rng.gen_range(1..=max_n);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    let density: f64 = rng.gen_range(0.0..0.5);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                edges.insert((u, v));
            }
        }
    }
    let mut edges: Vec<_> = edges.into_iter().collect();
    edges.shuffle(rng);
    // relabel so that vertex 0 is not always the tree root
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::new(n, edges.into_iter().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn random_tree(rng: &mut StdRng, n: usize) -> Graph {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = (1..n)
        .map(|v| (perm[rng.gen_range(0..v)], perm[v]))
        .collect();
    Graph::new(n, edges).unwrap()
}

pub fn random_weights(rng: &mut StdRng, g: Graph, max: u64) -> WeightedGraph<u64> {
    let w = (0..g.vertex_count())
        .map(|_| rng.gen_range(0..=max))
        .collect();
    let we = (0..g.edge_count())
        .map(|_| rng.gen_range(0..=max))
        .collect();
    WeightedGraph::new(g, w, we).unwrap()
}

/// Random edge-connected cell set of `1..=max_cells` hexagons, grown from the
/// origin.
pub fn random_cells(rng: &mut StdRng, max_cells: usize) -> BenzenoidSpec {
    let target = rng.gen_range(1..=max_cells);
    let mut cells = BTreeSet::from([Axial::new(0, 0)]);
    while cells.len() < target {
        let frontier: Vec<Axial> = cells
            .iter()
            .flat_map(|c| c.neighbors())
            .filter(|c| !cells.contains(c))
            .collect();
        cells.insert(*frontier.choose(rng).unwrap());
    }
    BenzenoidSpec::new(cells).unwrap()
}

/// No enclosed region of the complement other than single enclosed
/// hexagons, which are faces of the graph.
pub fn is_simple(spec: &BenzenoidSpec) -> bool {
    let cells: BTreeSet<Axial> = spec.cells().collect();
    let qs = cells.iter().map(|c| c.q);
    let rs = cells.iter().map(|c| c.r);
    let (q0, q1) = (qs.clone().min().unwrap() - 1, qs.max().unwrap() + 1);
    let (r0, r1) = (rs.clone().min().unwrap() - 1, rs.max().unwrap() + 1);
    let inside = |c: &Axial| (q0..=q1).contains(&c.q) && (r0..=r1).contains(&c.r);
    let start = Axial::new(q0, r0);
    let mut outside = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for nb in c.neighbors() {
            if inside(&nb) && !cells.contains(&nb) && outside.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    let faces: BTreeSet<Axial> = build_benzenoid(spec).faces().iter().copied().collect();
    (q0..=q1)
        .flat_map(|q| (r0..=r1).map(move |r| Axial::new(q, r)))
        .filter(|c| !cells.contains(c) && !outside.contains(c))
        .all(|c| faces.contains(&c))
}

pub fn random_simple_cells(rng: &mut StdRng, max_cells: usize) -> BenzenoidSpec {
    loop {
        let spec = random_cells(rng, max_cells);
        if is_simple(&spec) {
            return spec;
        }
    }
}

pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}
