//! Closed-form partition functions of complete and complete bipartite sources.
//!
//! For `K_{a,b}` the `A` side's image set `S` fixes the common neighbourhood
//! `N(S)` available to every `B` vertex:
//! `Z = Σ_S surj(S, a) · ν(N(S))^b`, where `surj(S, a)` is the weighted count of
//! maps from `a` labelled vertices onto `S` (inclusion-exclusion over subsets).
//!
//! For `K_m` the image must be a clique of the target in which every vertex hit
//! twice or more carries a loop.

use alloc::vec::Vec;

use num_traits::{One, Pow, Zero};

use crate::graph::TargetGraph;
use crate::rational::{ExactValue, Rational};

/// Largest target accepted by the closed forms (they enumerate subsets).
pub const STRUCTURAL_TARGET_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("closed forms need targets with at most {cap} vertices, got {n}")]
pub struct TargetTooLarge {
    pub n: usize,
    pub cap: usize,
}

fn check(h: &TargetGraph) -> Result<(), TargetTooLarge> {
    if h.n() > STRUCTURAL_TARGET_CAP {
        Err(TargetTooLarge { n: h.n(), cap: STRUCTURAL_TARGET_CAP })
    } else {
        Ok(())
    }
}

fn members(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

fn mass(h: &TargetGraph, mask: u32) -> Rational {
    members(mask).fold(Rational::zero(), |acc, v| acc + h.weight(v))
}

/// Weighted number of maps from `k` labelled points onto exactly `mask`.
fn surjection_weight(h: &TargetGraph, mask: u32, k: usize) -> Rational {
    let size = mask.count_ones();
    let mut total = Rational::zero();
    let mut sub = mask;
    // all submasks of `mask`, including 0
    loop {
        let term: Rational = Pow::pow(mass(h, sub), k);
        if (size - sub.count_ones()).is_multiple_of(2) {
            total += term;
        } else {
            total -= term;
        }
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
    total
}

fn to_value(r: Rational) -> ExactValue {
    ExactValue::from_rational(r).expect("partition functions are nonnegative")
}

/// `Z(K_{a,b}, H)`.
pub fn complete_bipartite_z(a: usize, b: usize, h: &TargetGraph) -> Result<ExactValue, TargetTooLarge> {
    check(h)?;
    let k = h.n();
    if a == 0 {
        return Ok(to_value(Pow::pow(mass(h, (1u32 << k) - 1), b)));
    }
    let full = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let rows: Vec<u32> = (0..k).map(|v| h.neighbors(v).fold(0u32, |m, u| m | 1 << u)).collect();
    let mut total = Rational::zero();
    for s in 1..=full {
        let common = members(s).fold(full, |m, v| m & rows[v]);
        let reach: Rational = Pow::pow(mass(h, common), b);
        if reach.is_zero() && b > 0 {
            continue;
        }
        total += surjection_weight(h, s, a) * reach;
    }
    Ok(to_value(total))
}

/// `Z(K_m, H)`.
pub fn complete_z(m: usize, h: &TargetGraph) -> Result<ExactValue, TargetTooLarge> {
    check(h)?;
    let k = h.n();
    if m == 0 {
        return Ok(ExactValue::one());
    }
    let full = if k == 0 { 0 } else { (1u32 << k) - 1 };
    let mut total = Rational::zero();
    for s in 1..=full {
        let verts: Vec<usize> = members(s).collect();
        let clique = verts.iter().enumerate().all(|(i, &u)| verts[i + 1..].iter().all(|&v| h.has_edge(u, v)));
        if !clique {
            continue;
        }
        let looped = verts.iter().filter(|&&v| h.has_loop(v)).fold(0u32, |m, &v| m | 1 << v);
        let single: Vec<usize> = verts.iter().copied().filter(|&v| !h.has_loop(v)).collect();
        if single.len() > m {
            continue;
        }
        // ordered placement of the once-hit vertices among the m positions
        let mut placements = Rational::one();
        for i in 0..single.len() {
            placements *= Rational::from_integer(num_bigint::BigInt::from(m - i));
        }
        let single_weight = single.iter().fold(Rational::one(), |acc, &v| acc * h.weight(v));
        total += placements * single_weight * surjection_weight(h, looped, m - single.len());
    }
    Ok(to_value(total))
}
