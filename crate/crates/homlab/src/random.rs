//! Seeded random instances for the identity suite.

use homlab_core::rational::ratio;
use homlab_core::{BipartiteTarget, Rational, SimpleGraph, TargetGraph};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Independent stream for `(seed, stream)`, so adding a sub-check never shifts
/// the instances of another.
pub fn stream_rng(seed: u64, stream: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // FNV-1a of the stream name selects the ChaCha stream
    let h = stream.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3));
    rng.set_stream(h);
    rng
}

/// `p/q` with `p, q` uniform in `1..=max`.
pub fn weight<R: Rng>(rng: &mut R, max: u32) -> Rational {
    ratio(rng.random_range(1..=max) as i64, rng.random_range(1..=max) as i64)
}

pub fn weights<R: Rng>(rng: &mut R, n: usize, max: u32) -> Vec<Rational> {
    (0..n).map(|_| weight(rng, max)).collect()
}

/// `G(n, p)` with `n` uniform in `1..=max_n` and `p` uniform in `[0, 1)`.
pub fn simple_graph<R: Rng>(rng: &mut R, max_n: usize) -> SimpleGraph {
    let n = rng.random_range(1..=max_n);
    let p: f64 = rng.random();
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::build(n, &edges).expect("generated edges are valid")
}

/// Bipartite target with sides of size `1..=max_side`, between 1 and
/// `max_edges` edges, and random weights. Vertices `0..a` form side A.
pub fn bipartite_target<R: Rng>(rng: &mut R, max_side: usize, max_edges: usize, max_weight: u32) -> BipartiteTarget {
    let a = rng.random_range(1..=max_side);
    let b = rng.random_range(1..=max_side);
    let m = rng.random_range(1..=max_edges.min(a * b));
    let edges: Vec<(usize, usize)> = sample(rng, a * b, m).into_iter().map(|k| (k / b, a + k % b)).collect();
    let part_a: Vec<usize> = (0..a).collect();
    let graph = TargetGraph::from_edges(a + b, &edges).expect("generated edges are valid");
    let ws = weights(rng, a + b, max_weight);
    BipartiteTarget::new(graph, &part_a).and_then(|h| h.with_weights(ws)).expect("sides are independent by construction")
}

/// Target on `1..=max_n` vertices with random loops, edges and weights.
pub fn target<R: Rng>(rng: &mut R, max_n: usize, max_weight: u32) -> TargetGraph {
    let n = rng.random_range(1..=max_n);
    let mut pairs = Vec::new();
    for v in 0..n {
        for u in 0..=v {
            if rng.random_bool(0.5) {
                pairs.push((u, v));
            }
        }
    }
    let ws = weights(rng, n, max_weight);
    TargetGraph::from_edges(n, &pairs).and_then(|h| h.with_weights(ws)).expect("generated target is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: Vec<u64> = (0..4).map(|_| stream_rng(7, "cover").random()).collect();
        let b: Vec<u64> = (0..4).map(|_| stream_rng(7, "cover").random()).collect();
        assert_eq!(a, b);
        let x: u64 = stream_rng(7, "cover").random();
        let y: u64 = stream_rng(7, "tensor").random();
        let z: u64 = stream_rng(8, "cover").random();
        assert!(x != y && x != z);
    }

    #[test]
    fn generated_shapes_respect_caps() {
        let mut rng = stream_rng(1, "caps");
        for _ in 0..200 {
            let h = bipartite_target(&mut rng, 4, 8, 10);
            let e = h.oriented_edges().len();
            assert!((1..=8).contains(&e));
            for w in h.graph().weights() {
                assert!(*w.numer() >= 1.into() && *w.numer() <= 10.into() && *w.denom() <= 10.into());
            }
            let g = simple_graph(&mut rng, 7);
            assert!((1..=7).contains(&g.n()));
        }
    }
}
