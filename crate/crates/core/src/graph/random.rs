//! Seeded Erdős–Rényi sampling conditioned on connectivity.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError};

/// Attempts per connected sample before giving up.
pub const RETRY_BUDGET: usize = 1000;

/// `G(n, p)` resampled until connected, seeded with `seed`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_with(&mut rng, n, p)
}

/// As [`random_connected`] but drawing from a caller-owned generator, so a
/// sequence of samples can share one seed.
pub fn random_connected_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    p: f64,
) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::Argument(format!(
            "random graphs need n >= 2, got {n}"
        )));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(GraphError::Argument(format!(
            "edge probability must lie in (0, 1], got {p}"
        )));
    }
    for _ in 0..RETRY_BUDGET {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen::<f64>() < p {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, edges)?;
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GraphError::SamplingExhausted {
        n,
        p,
        attempts: RETRY_BUDGET,
    })
}
