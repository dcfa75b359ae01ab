#![allow(dead_code)]

use std::collections::BTreeMap;

use homlab_core::canon::canonical_form;
use homlab_core::rational::ratio;
use homlab_core::{BipartiteTarget, CanonicalForm, Rational, SimpleGraph, TargetGraph};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every graph on `0..=max_n` vertices up to isomorphism, grown one vertex at a
/// time and deduplicated by canonical form.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Vec<SimpleGraph>> {
    let mut levels = vec![vec![SimpleGraph::empty(0)]];
    for n in 1..=max_n {
        let mut next: BTreeMap<CanonicalForm, SimpleGraph> = BTreeMap::new();
        for g in &levels[n - 1] {
            let base = g.edges();
            for mask in 0u32..1 << (n - 1) {
                let mut edges = base.clone();
                edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                let h = SimpleGraph::build(n, &edges).unwrap();
                next.entry(canonical_form(&h).unwrap()).or_insert(h);
            }
        }
        levels.push(next.into_values().collect());
    }
    levels
}

/// Seeded generator for test corpora.
pub struct TestRng(ChaCha8Rng);

impl TestRng {
    pub fn seeded(seed: u64) -> Self {
        TestRng(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.0.random_range(0..n)
    }

    pub fn weight(&mut self) -> Rational {
        ratio(self.0.random_range(1..=10), self.0.random_range(1..=10))
    }

    pub fn graph(&mut self, n: usize, p_percent: u64) -> SimpleGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.below(100) < p_percent {
                    e.push((u, v));
                }
            }
        }
        SimpleGraph::build(n, &e).unwrap()
    }

    pub fn target(&mut self, n: usize, p_percent: u64, weighted: bool) -> TargetGraph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u..n {
                if self.below(100) < p_percent {
                    e.push((u, v));
                }
            }
        }
        let t = TargetGraph::from_edges(n, &e).unwrap();
        if weighted {
            let w = (0..n).map(|_| self.weight()).collect();
            t.with_weights(w).unwrap()
        } else {
            t
        }
    }

    /// Random bipartite target with sides `a`, `b`, between 1 and `max_edges` edges.
    pub fn bipartite(&mut self, a: usize, b: usize, max_edges: usize, weighted: bool) -> BipartiteTarget {
        let mut pairs: Vec<(usize, usize)> = (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))).collect();
        pairs.shuffle(&mut self.0);
        let m = self.0.random_range(1..=max_edges.min(pairs.len()));
        let t = TargetGraph::from_edges(a + b, &pairs[..m]).unwrap();
        let t = if weighted {
            let w = (0..a + b).map(|_| self.weight()).collect();
            t.with_weights(w).unwrap()
        } else {
            t
        };
        BipartiteTarget::new(t, &(0..a).collect::<Vec<_>>()).unwrap()
    }

    /// Graph on `1..=max_n` vertices.
    pub fn graph_upto(&mut self, max_n: usize, p_percent: u64) -> SimpleGraph {
        let n = self.0.random_range(1..=max_n);
        self.graph(n, p_percent)
    }

    pub fn target_upto(&mut self, max_n: usize, p_percent: u64, weighted: bool) -> TargetGraph {
        let n = self.0.random_range(1..=max_n);
        self.target(n, p_percent, weighted)
    }

    pub fn bipartite_upto(&mut self, max_a: usize, max_b: usize, max_edges: usize, weighted: bool) -> BipartiteTarget {
        let a = self.0.random_range(1..=max_a);
        let b = self.0.random_range(1..=max_b);
        self.bipartite(a, b, max_edges, weighted)
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.0);
        p
    }
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}
