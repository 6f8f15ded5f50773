//! Fixed inputs for the benchmarks, so runs compare like with like.

use giwb_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` G(n, p) graphs from a fixed seed.
pub fn random_graphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |w| (u, w)))
                .filter(|_| rng.gen_bool(p))
                .collect();
            Graph::from_edges(n, edges).expect("n within range")
        })
        .collect()
}
