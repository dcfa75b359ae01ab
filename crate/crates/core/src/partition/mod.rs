//! Exact homomorphism counts and partition functions.
//!
//! Three independent engines compute the same sum
//! `Z(G, H) = Σ_φ Π_{uv ∈ E(G)} 1[φ(u)φ(v) ∈ E(H)] · Π_w ν(φ(w))`:
//!
//! * [`brute_force_z`] walks every map `V(G) → V(H)`;
//! * [`partition_z`] enumerates valid partial maps depth-first;
//! * [`hom_count_dp`] runs variable elimination along a vertex order.
//!
//! [`partition_z_fast`] picks elimination along a minimum-degree order and falls
//! back to depth-first enumeration if the width cap is hit. All arithmetic is
//! exact; the empty source graph has value 1.

mod compare;
mod dp;
mod engine;
mod structural;

use alloc::vec::Vec;

pub use compare::{compare_values, NormalizedComparison};
pub use dp::{elimination_width, min_degree_order, DpError, TABLE_CAP, WIDTH_CAP};
pub use structural::{complete_bipartite_z, complete_z, TargetTooLarge, STRUCTURAL_TARGET_CAP};

use engine::Instance;

use crate::graph::{BipartiteTarget, SimpleGraph, TargetGraph};
use crate::rational::ExactValue;

/// `hom(G, H)`: weights of `H` are ignored.
pub fn hom_count(g: &SimpleGraph, h: &TargetGraph) -> ExactValue {
    fast(&Instance::unrestricted(g.adjacency(), h, false))
}

/// `Z(G, H)` by depth-first enumeration.
pub fn partition_z(g: &SimpleGraph, h: &TargetGraph) -> ExactValue {
    let inst = Instance::unrestricted(g.adjacency(), h, true);
    inst.finish(inst.backtrack())
}

/// `Z(G, H)` by exhaustive enumeration of all `|V(H)|^|V(G)|` maps.
pub fn brute_force_z(g: &SimpleGraph, h: &TargetGraph) -> ExactValue {
    let inst = Instance::unrestricted(g.adjacency(), h, true);
    inst.finish(inst.brute_force())
}

/// `Z(G, H)` by variable elimination along `order`.
pub fn hom_count_dp(g: &SimpleGraph, h: &TargetGraph, order: &[usize]) -> Result<ExactValue, DpError> {
    let inst = Instance::unrestricted(g.adjacency(), h, true);
    Ok(inst.finish(dp::eliminate(&inst, order)?))
}

/// `Z(G, H)` by the fastest applicable engine.
pub fn partition_z_fast(g: &SimpleGraph, h: &TargetGraph) -> ExactValue {
    fast(&Instance::unrestricted(g.adjacency(), h, true))
}

fn fast(inst: &Instance<'_>) -> ExactValue {
    let order = min_degree_order(inst.source);
    match dp::eliminate(inst, &order) {
        Ok(total) => inst.finish(total),
        Err(_) => inst.finish(inst.backtrack()),
    }
}

fn bipartite_instance<'a>(g: &'a BipartiteTarget, h: &'a BipartiteTarget) -> Instance<'a> {
    let (a, b) = (h.part_a(), h.part_b());
    let domains: Vec<Vec<usize>> = (0..g.n()).map(|v| if g.in_a(v) { a.clone() } else { b.clone() }).collect();
    Instance::new(g.graph().adjacency(), h.graph(), domains, true)
}

/// `Z_b(G, H)`: maps sending `A(G)` into `A(H)` and `B(G)` into `B(H)`. Weights
/// of the source are ignored; the source bipartition is taken as designated.
pub fn partition_zb(g: &BipartiteTarget, h: &BipartiteTarget) -> ExactValue {
    fast(&bipartite_instance(g, h))
}

/// [`partition_zb`] by exhaustive enumeration of bipartition-respecting maps.
pub fn brute_force_zb(g: &BipartiteTarget, h: &BipartiteTarget) -> ExactValue {
    let inst = bipartite_instance(g, h);
    inst.finish(inst.brute_force())
}

/// [`partition_zb`] by depth-first enumeration.
pub fn partition_zb_backtrack(g: &BipartiteTarget, h: &BipartiteTarget) -> ExactValue {
    let inst = bipartite_instance(g, h);
    inst.finish(inst.backtrack())
}

/// `p_H(G1)` vs `p_H(G2)`.
pub fn compare_normalized(g1: &SimpleGraph, g2: &SimpleGraph, h: &TargetGraph) -> NormalizedComparison {
    let z1 = partition_z_fast(g1, h);
    let z2 = partition_z_fast(g2, h);
    compare_values(&z1, g1.n(), &z2, g2.n())
}

#[cfg(test)]
mod tests;
