#![allow(dead_code)]

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use unmixed::Graph;

pub type Rng = Xoshiro256StarStar;

pub fn rng(seed: u64) -> Rng {
    Xoshiro256StarStar::seed_from_u64(seed)
}

fn below(rng: &mut Rng, k: u64) -> u64 {
    rng.next_u64() % k
}

fn coin(rng: &mut Rng, p: f64) -> bool {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64) < p
}

/// Connected bipartite graph with at most `max_n` vertices: random sides, a
/// random spanning tree across them, then extra cross edges with a random
/// density.
pub fn random_connected_bipartite(rng: &mut Rng, max_n: usize) -> Graph {
    let n = 2 + below(rng, max_n as u64 - 1) as usize;
    let left = 1 + below(rng, n as u64 - 1) as usize;
    let side = |v: usize| v < left;
    let mut g = Graph::empty(n);
    // attach each vertex after the first of each side to an earlier
    // vertex of the other side
    let order: Vec<usize> = {
        let mut o = vec![0, left];
        o.extend((1..left).chain(left + 1..n));
        o
    };
    g.add_edge(0, left).unwrap();
    for (k, &v) in order.iter().enumerate().skip(2) {
        let earlier: Vec<usize> = order[..k]
            .iter()
            .copied()
            .filter(|&u| side(u) != side(v))
            .collect();
        let u = earlier[below(rng, earlier.len() as u64) as usize];
        g.add_edge(u, v).unwrap();
    }
    let p = below(rng, 100) as f64 / 100.0;
    for u in 0..left {
        for v in left..n {
            if coin(rng, p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Every bipartite graph on `n` vertices, once per 2-coloring that puts
/// vertex 0 on side 0. A connected bipartite graph has exactly one such
/// coloring, so each connected one is produced exactly once. Yields the
/// graph and the side-1 vertex mask.
pub fn bipartite_graphs(n: usize) -> impl Iterator<Item = (Graph, u64)> {
    (0..1u64 << n.saturating_sub(1)).flat_map(move |half| {
        let side1 = half << 1;
        let cross: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| (side1 >> u & 1) != (side1 >> v & 1))
            .collect();
        (0..1u64 << cross.len()).map(move |code| {
            let mut g = Graph::empty(n);
            for (k, &(u, v)) in cross.iter().enumerate() {
                if code >> k & 1 == 1 {
                    g.add_edge(u, v).unwrap();
                }
            }
            (g, side1)
        })
    })
}
