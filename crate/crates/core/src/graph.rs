//! Source graphs, weighted target graphs, and designated bipartitions.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed};

use crate::bits::BitMatrix;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} in a simple graph")]
    Loop(usize),
    #[error("adjacency matrix is not symmetric")]
    Asymmetric,
    #[error("weight of vertex {0} is not strictly positive")]
    NonPositiveWeight(usize),
    #[error("expected {expected} weights, got {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("vertex {0} has a loop but bipartite targets are loopless")]
    BipartiteLoop(usize),
    #[error("edge {0}-{1} lies inside one side of the bipartition")]
    EdgeInsidePart(usize, usize),
    #[error("graph is not bipartite")]
    NotBipartite,
}

/// Undirected loopless graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleGraph {
    adj: BitMatrix,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph { adj: BitMatrix::new(n) }
    }

    /// Validated construction; duplicate pairs collapse, loops and out-of-range
    /// endpoints are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = BitMatrix::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj.set_sym(u, v, true);
        }
        Ok(SimpleGraph { adj })
    }

    pub fn from_adjacency(adj: BitMatrix) -> Result<Self, GraphError> {
        if !adj.is_symmetric() {
            return Err(GraphError::Asymmetric);
        }
        if let Some(v) = (0..adj.len()).find(|&v| adj.get(v, v)) {
            return Err(GraphError::Loop(v));
        }
        Ok(SimpleGraph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_iter(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            out.extend(self.adj.row_iter(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_d_regular(&self, d: usize) -> bool {
        (0..self.n()).all(|v| self.degree(v) == d)
    }

    pub fn is_triangle_free(&self) -> bool {
        let n = self.n();
        for u in 0..n {
            for v in self.neighbors(u).filter(|&v| v > u) {
                let shared = self.adj.row(u).iter().zip(self.adj.row(v)).any(|(a, b)| a & b != 0);
                if shared {
                    return false;
                }
            }
        }
        true
    }

    /// Component index per vertex, components numbered by least vertex.
    pub fn components(&self) -> Vec<usize> {
        let n = self.n();
        let mut comp = vec![usize::MAX; n];
        let mut next = 0;
        for s in 0..n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        queue.push_back(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Two-colouring with the least-labelled vertex of every component in `A`,
    /// or `None` if an odd cycle exists. Both sides are returned sorted.
    pub fn bipartition_of(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let a = (0..n).filter(|&v| side[v] == Some(false)).collect();
        let b = (0..n).filter(|&v| side[v] == Some(true)).collect();
        Some((a, b))
    }

    /// Relabelled copy whose vertex `i` is the old vertex `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        SimpleGraph { adj: self.adj.permuted(perm) }
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let n = self.n();
        let mut adj = BitMatrix::new(n + other.n());
        for (u, v) in self.edges() {
            adj.set_sym(u, v, true);
        }
        for (u, v) in other.edges() {
            adj.set_sym(n + u, n + v, true);
        }
        SimpleGraph { adj }
    }
}

/// Vertex-weighted graph, loops allowed. An unweighted target has all weights 1.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TargetGraph {
    adj: BitMatrix,
    weights: Vec<Rational>,
}

impl TargetGraph {
    /// Unweighted target; pairs `(v, v)` are loops.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj = BitMatrix::new(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            adj.set_sym(u, v, true);
        }
        Ok(TargetGraph::unweighted(adj))
    }

    pub fn from_parts(adj: BitMatrix, weights: Vec<Rational>) -> Result<Self, GraphError> {
        if !adj.is_symmetric() {
            return Err(GraphError::Asymmetric);
        }
        if weights.len() != adj.len() {
            return Err(GraphError::WeightCount { expected: adj.len(), found: weights.len() });
        }
        if let Some(v) = weights.iter().position(|w| !w.is_positive()) {
            return Err(GraphError::NonPositiveWeight(v));
        }
        Ok(TargetGraph { adj, weights })
    }

    pub(crate) fn unweighted(adj: BitMatrix) -> Self {
        let weights = vec![Rational::one(); adj.len()];
        TargetGraph { adj, weights }
    }

    pub fn with_weights(self, weights: Vec<Rational>) -> Result<Self, GraphError> {
        TargetGraph::from_parts(self.adj, weights)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.adj.get(v, v)
    }

    pub fn weight(&self, v: usize) -> &Rational {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|w| w.is_one())
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj.row_iter(v)
    }

    /// Number of adjacency-matrix ones in row `v` (a loop counts once).
    pub fn degree(&self, v: usize) -> usize {
        self.adj.row_count(v)
    }

    pub fn looped_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.has_loop(v)).collect()
    }

    /// Non-loop edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            out.extend(self.adj.row_iter(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn permuted(&self, perm: &[usize]) -> TargetGraph {
        TargetGraph { adj: self.adj.permuted(perm), weights: perm.iter().map(|&p| self.weights[p].clone()).collect() }
    }

    /// Copy with every weight multiplied by `c`, which must be positive.
    pub fn scaled(&self, c: &Rational) -> TargetGraph {
        assert!(c.is_positive(), "weight scale must be positive");
        TargetGraph { adj: self.adj.clone(), weights: self.weights.iter().map(|w| w * c).collect() }
    }
}

impl From<&SimpleGraph> for TargetGraph {
    fn from(g: &SimpleGraph) -> Self {
        TargetGraph::unweighted(g.adj.clone())
    }
}

/// A loopless target with a designated bipartition `(A, B)`. The bipartition is
/// part of the value.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipartiteTarget {
    graph: TargetGraph,
    in_a: Vec<bool>,
}

impl BipartiteTarget {
    /// `part_a` lists the `A` side; every other vertex is in `B`.
    pub fn new(graph: TargetGraph, part_a: &[usize]) -> Result<Self, GraphError> {
        let n = graph.n();
        let mut in_a = vec![false; n];
        for &v in part_a {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            in_a[v] = true;
        }
        if let Some(v) = (0..n).find(|&v| graph.has_loop(v)) {
            return Err(GraphError::BipartiteLoop(v));
        }
        for (u, v) in graph.edges() {
            if in_a[u] == in_a[v] {
                return Err(GraphError::EdgeInsidePart(u, v));
            }
        }
        Ok(BipartiteTarget { graph, in_a })
    }

    /// Uses the canonical two-colouring of [`SimpleGraph::bipartition_of`].
    pub fn from_simple(g: &SimpleGraph) -> Result<Self, GraphError> {
        let (a, _) = g.bipartition_of().ok_or(GraphError::NotBipartite)?;
        BipartiteTarget::new(TargetGraph::from(g), &a)
    }

    pub fn graph(&self) -> &TargetGraph {
        &self.graph
    }

    pub fn into_graph(self) -> TargetGraph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn in_a(&self, v: usize) -> bool {
        self.in_a[v]
    }

    pub fn part_a(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.in_a[v]).collect()
    }

    pub fn part_b(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| !self.in_a[v]).collect()
    }

    /// Edges as `(a, b)` with `a` in `A`, sorted by `(a, b)`.
    pub fn oriented_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.graph.edges().into_iter().map(|(u, v)| if self.in_a[u] { (u, v) } else { (v, u) }).collect();
        out.sort_unstable();
        out
    }

    pub fn with_weights(self, weights: Vec<Rational>) -> Result<Self, GraphError> {
        Ok(BipartiteTarget { graph: self.graph.with_weights(weights)?, in_a: self.in_a })
    }

    /// Underlying graph viewed as a simple graph (weights dropped).
    pub fn to_simple(&self) -> SimpleGraph {
        SimpleGraph { adj: self.graph.adj.clone() }
    }
}
