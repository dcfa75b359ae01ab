//! Shared problem setup and the two enumeration engines.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bits::BitMatrix;
use crate::graph::TargetGraph;
use crate::rational::ExactValue;

/// A weighted homomorphism problem with per-vertex domains and integer weights.
///
/// Target weights `ν(v)` are stored as `weights[v] / scale` with `scale` the lcm
/// of their denominators, so every engine sums integers and divides once.
pub(crate) struct Instance<'a> {
    pub source: &'a BitMatrix,
    pub target: &'a TargetGraph,
    pub domains: Vec<Vec<usize>>,
    pub weights: Vec<BigUint>,
    pub scale: BigUint,
}

impl<'a> Instance<'a> {
    pub fn new(source: &'a BitMatrix, target: &'a TargetGraph, domains: Vec<Vec<usize>>, weighted: bool) -> Self {
        let (weights, scale) = if weighted { integer_weights(target) } else { (vec![BigUint::one(); target.n()], BigUint::one()) };
        Instance { source, target, domains, weights, scale }
    }

    pub fn unrestricted(source: &'a BitMatrix, target: &'a TargetGraph, weighted: bool) -> Self {
        let all: Vec<usize> = (0..target.n()).collect();
        Instance::new(source, target, vec![all; source.len()], weighted)
    }

    pub fn n(&self) -> usize {
        self.source.len()
    }

    pub fn finish(&self, total: BigUint) -> ExactValue {
        let denom = num_traits::pow(self.scale.clone(), self.n());
        ExactValue::from_ratio(total, denom)
    }

    /// Sum over every map in the domain product, no pruning.
    pub fn brute_force(&self) -> BigUint {
        let n = self.n();
        if self.domains.iter().any(|d| d.is_empty()) {
            return BigUint::zero();
        }
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| self.source.row_iter(u).filter(move |&v| v > u).map(move |v| (u, v))).collect();
        let mut digit = vec![0usize; n];
        let mut total = BigUint::zero();
        loop {
            let image = |v: usize| self.domains[v][digit[v]];
            if edges.iter().all(|&(u, v)| self.target.has_edge(image(u), image(v))) {
                let mut term = BigUint::one();
                for v in 0..n {
                    term *= &self.weights[image(v)];
                }
                total += term;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return total;
                }
                digit[i] += 1;
                if digit[i] < self.domains[i].len() {
                    break;
                }
                digit[i] = 0;
                i += 1;
            }
        }
    }

    /// Depth-first enumeration of valid partial maps, vertices in BFS order.
    pub fn backtrack(&self) -> BigUint {
        let n = self.n();
        let order = bfs_order(self.source);
        let mut position = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            position[v] = i;
        }
        // earlier-placed neighbours of each vertex
        let back: Vec<Vec<usize>> = order.iter().map(|&v| self.source.row_iter(v).filter(|&u| position[u] < position[v]).collect()).collect();
        let mut image = vec![0usize; n];
        self.backtrack_from(0, &order, &back, &mut image)
    }

    fn backtrack_from(&self, depth: usize, order: &[usize], back: &[Vec<usize>], image: &mut [usize]) -> BigUint {
        if depth == order.len() {
            return BigUint::one();
        }
        let v = order[depth];
        let mut total = BigUint::zero();
        for &c in &self.domains[v] {
            if back[depth].iter().all(|&u| self.target.has_edge(image[u], c)) {
                image[v] = c;
                let rest = self.backtrack_from(depth + 1, order, back, image);
                if !rest.is_zero() {
                    total += rest * &self.weights[c];
                }
            }
        }
        total
    }
}

fn bfs_order(adj: &BitMatrix) -> Vec<usize> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in adj.row_iter(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                }
            }
        }
    }
    order
}

fn integer_weights(target: &TargetGraph) -> (Vec<BigUint>, BigUint) {
    let mut scale = BigInt::one();
    for w in target.weights() {
        scale = scale.lcm(w.denom());
    }
    let weights = target
        .weights()
        .iter()
        .map(|w| {
            let scaled = w.numer() * (&scale / w.denom());
            scaled.to_biguint().expect("weights are positive")
        })
        .collect();
    (weights, scale.to_biguint().expect("positive scale"))
}
