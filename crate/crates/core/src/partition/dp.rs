//! Variable elimination along a vertex order.
//!
//! Every source vertex carries a unary weight factor and every edge an
//! indicator factor. Eliminating `v` multiplies the factors that mention `v`
//! and sums `v` out, leaving a factor over the neighbours `v` still has in the
//! fill-in graph.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::engine::Instance;
use crate::bits::BitMatrix;

/// Largest number of live neighbours allowed when eliminating a vertex.
pub const WIDTH_CAP: usize = 12;
/// Largest intermediate table, in entries.
pub const TABLE_CAP: usize = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DpError {
    #[error("elimination order is not a permutation of the source vertices")]
    InvalidOrder,
    #[error("elimination width {width} exceeds cap {cap}")]
    WidthExceeded { width: usize, cap: usize },
    #[error("intermediate table of {entries} entries exceeds cap {cap}")]
    TableTooLarge { entries: u128, cap: usize },
}

/// Minimum-degree order on the fill-in graph, ties broken by smallest label.
pub fn min_degree_order(adj: &BitMatrix) -> Vec<usize> {
    let n = adj.len();
    let mut fill = adj.clone();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| alive[v]).min_by_key(|&v| (live_neighbours(&fill, &alive, v).len(), v)).unwrap();
        eliminate_symbolic(&mut fill, &mut alive, v);
        order.push(v);
    }
    order
}

/// Largest number of live neighbours met while eliminating along `order`.
pub fn elimination_width(adj: &BitMatrix, order: &[usize]) -> usize {
    bags(adj, order).iter().map(Vec::len).max().unwrap_or(0)
}

fn live_neighbours(fill: &BitMatrix, alive: &[bool], v: usize) -> Vec<usize> {
    fill.row_iter(v).filter(|&u| u != v && alive[u]).collect()
}

fn eliminate_symbolic(fill: &mut BitMatrix, alive: &mut [bool], v: usize) -> Vec<usize> {
    let nb = live_neighbours(fill, alive, v);
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            fill.set_sym(a, b, true);
        }
    }
    alive[v] = false;
    nb
}

/// Live neighbourhood of each vertex at its elimination step.
fn bags(adj: &BitMatrix, order: &[usize]) -> Vec<Vec<usize>> {
    let mut fill = adj.clone();
    let mut alive = vec![true; adj.len()];
    order.iter().map(|&v| eliminate_symbolic(&mut fill, &mut alive, v)).collect()
}

struct Factor {
    scope: Vec<usize>,
    dims: Vec<usize>,
    table: Vec<BigUint>,
}

impl Factor {
    fn index(&self, digits: &[usize]) -> usize {
        digits.iter().zip(&self.dims).fold(0, |acc, (&d, &n)| acc * n + d)
    }
}

pub(crate) fn eliminate(inst: &Instance<'_>, order: &[usize]) -> Result<BigUint, DpError> {
    let n = inst.n();
    let mut seen = vec![false; n];
    if order.len() != n || order.iter().any(|&v| v >= n || core::mem::replace(&mut seen[v], true)) {
        return Err(DpError::InvalidOrder);
    }
    let bag_list = bags(inst.source, order);
    for bag in &bag_list {
        if bag.len() > WIDTH_CAP {
            return Err(DpError::WidthExceeded { width: bag.len(), cap: WIDTH_CAP });
        }
        let entries = bag.iter().fold(1u128, |acc, &u| acc.saturating_mul(inst.domains[u].len() as u128));
        if entries > TABLE_CAP as u128 {
            return Err(DpError::TableTooLarge { entries, cap: TABLE_CAP });
        }
    }
    if inst.domains.iter().any(|d| d.is_empty()) {
        return Ok(BigUint::zero());
    }

    let mut factors: Vec<Factor> = Vec::new();
    for v in 0..n {
        let table = inst.domains[v].iter().map(|&c| inst.weights[c].clone()).collect();
        factors.push(Factor { scope: vec![v], dims: vec![inst.domains[v].len()], table });
        for u in inst.source.row_iter(v).filter(|&u| u > v) {
            let (dv, du) = (&inst.domains[v], &inst.domains[u]);
            let mut table = Vec::with_capacity(dv.len() * du.len());
            for &a in dv {
                for &b in du {
                    table.push(if inst.target.has_edge(a, b) { BigUint::one() } else { BigUint::zero() });
                }
            }
            factors.push(Factor { scope: vec![v, u], dims: vec![dv.len(), du.len()], table });
        }
    }

    for &v in order {
        let (touching, rest): (Vec<Factor>, Vec<Factor>) = factors.into_iter().partition(|f| f.scope.contains(&v));
        factors = rest;
        let mut scope: Vec<usize> = touching.iter().flat_map(|f| f.scope.iter().copied()).filter(|&u| u != v).collect();
        scope.sort_unstable();
        scope.dedup();
        let dims: Vec<usize> = scope.iter().map(|&u| inst.domains[u].len()).collect();
        let size: usize = dims.iter().product();
        // where each touching factor reads its digits from: Some(i) = scope[i], None = v
        let sources: Vec<Vec<Option<usize>>> = touching.iter().map(|f| f.scope.iter().map(|u| scope.iter().position(|s| s == u)).collect()).collect();
        let mut table = Vec::with_capacity(size);
        let mut digits = vec![0usize; scope.len()];
        let mut local: Vec<Vec<usize>> = touching.iter().map(|f| vec![0; f.scope.len()]).collect();
        for _ in 0..size {
            let mut sum = BigUint::zero();
            for dv in 0..inst.domains[v].len() {
                let mut prod: Option<BigUint> = None;
                let mut zero = false;
                for (fi, f) in touching.iter().enumerate() {
                    for (slot, src) in local[fi].iter_mut().zip(&sources[fi]) {
                        *slot = src.map_or(dv, |i| digits[i]);
                    }
                    let entry = &f.table[f.index(&local[fi])];
                    if entry.is_zero() {
                        zero = true;
                        break;
                    }
                    if !entry.is_one() || prod.is_none() {
                        prod = Some(match prod {
                            None => entry.clone(),
                            Some(p) => p * entry,
                        });
                    }
                }
                if !zero {
                    sum += prod.unwrap_or_else(BigUint::one);
                }
            }
            table.push(sum);
            for i in (0..digits.len()).rev() {
                digits[i] += 1;
                if digits[i] < dims[i] {
                    break;
                }
                digits[i] = 0;
            }
        }
        factors.push(Factor { scope, dims, table });
    }

    Ok(factors.into_iter().fold(BigUint::one(), |acc, f| acc * &f.table[0]))
}
