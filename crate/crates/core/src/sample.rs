//! Seeded random instances for property checks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::firing::{ChipConfig, FiringSystem, Multigraph, Site};

/// Bounds for [`random_sink_game`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GameShape {
    pub max_vertices: usize,
    pub max_chips: u64,
    pub max_multiplicity: u64,
}

impl Default for GameShape {
    fn default() -> Self {
        GameShape {
            max_vertices: 5,
            max_chips: 8,
            max_multiplicity: 2,
        }
    }
}

/// A connected multigraph on 2 to `max_vertices` vertices with at least one
/// sink, and up to `max_chips` chips on its non-sink vertices. Connectivity
/// to a sink makes every such game terminate.
pub fn random_sink_game(seed: u64, shape: GameShape) -> (FiringSystem, ChipConfig) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(2..=shape.max_vertices.max(2));
    let mut g = Multigraph::new(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v, rng.gen_range(1..=shape.max_multiplicity))
            .expect("valid tree edge");
    }
    for _ in 0..rng.gen_range(0..=n) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.add_edge(u, v, rng.gen_range(1..=shape.max_multiplicity))
                .expect("valid extra edge");
        }
    }
    let sinks = rng.gen_range(1..n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    for &v in &order[..sinks] {
        g.set_sink(v).expect("vertex in range");
    }
    let chips = rng.gen_range(1..=shape.max_chips);
    let free: Vec<usize> = order[sinks..].to_vec();
    let mut cfg = ChipConfig::new();
    for _ in 0..chips {
        cfg.add(Site::vertex(free[rng.gen_range(0..free.len())]), 1);
    }
    (FiringSystem::Graph(g), cfg)
}
