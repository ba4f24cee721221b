//! Seeded random posets for test corpora.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::Poset;

/// Probability of asserting each relation `x_i < x_j`, `i < j`.
pub const DEFAULT_EDGE_PROBABILITY: f64 = 0.3;

/// Random DAG on `n` vertices (each pair `i < j` kept with probability `p`),
/// closed transitively. The identity labelling is already admissible.
pub fn random_poset<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Poset {
    let mut relations = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if rng.random_bool(p) {
                relations.push((i, j));
            }
        }
    }
    Poset::from_cover_relations(n, &relations).expect("forward arcs are acyclic")
}

/// A deterministic corpus of `count` random posets with sizes drawn
/// uniformly from `min_n..=max_n`.
pub fn random_corpus(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Poset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(min_n..=max_n);
            random_poset(n, DEFAULT_EDGE_PROBABILITY, &mut rng)
        })
        .collect()
}
