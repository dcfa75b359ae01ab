use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::*;
use crate::constructions::{add_loops, complete, complete_bipartite, cycle, double_cover_plus_matching, h_ind, h_wr, h_wr_weighted, path, star};
use crate::graph::TargetGraph;
use crate::rational::{ratio, Rational};

fn value(v: u64) -> ExactValue {
    ExactValue::from(v)
}

/// Independent-set count by subset scan.
fn independent_sets(g: &SimpleGraph) -> u64 {
    let n = g.n();
    (0u32..1 << n).filter(|&s| g.edges().iter().all(|&(u, v)| !(s >> u & 1 == 1 && s >> v & 1 == 1))).count() as u64
}

fn all_engines(g: &SimpleGraph, h: &TargetGraph) -> ExactValue {
    let bf = brute_force_z(g, h);
    assert_eq!(partition_z(g, h), bf);
    assert_eq!(hom_count_dp(g, h, &min_degree_order(g.adjacency())).unwrap(), bf);
    let identity: Vec<usize> = (0..g.n()).collect();
    assert_eq!(hom_count_dp(g, h, &identity).unwrap(), bf);
    bf
}

#[test]
fn spot_values() {
    assert_eq!(all_engines(&SimpleGraph::empty(1), &h_wr()), value(3));
    assert_eq!(all_engines(&cycle(4), &h_ind()), value(7));
    assert_eq!(independent_sets(&cycle(4)), 7);
    assert_eq!(all_engines(&complete(4), &h_wr()), value(31));
    assert_eq!(all_engines(&cycle(4), &h_wr()), value(35));
    assert_eq!(all_engines(&cycle(5), &h_wr()), value(83));
    assert_eq!(all_engines(&cycle(6), &h_wr()), value(199));
    assert_eq!(all_engines(&complete(3), &h_wr()), value(15));
    assert_eq!(hom_count(&cycle(5), &h_wr()), value(83));
}

#[test]
fn empty_source_is_one() {
    let g = SimpleGraph::empty(0);
    assert_eq!(all_engines(&g, &h_wr()), ExactValue::one());
    assert_eq!(partition_z_fast(&g, &h_ind()), ExactValue::one());
}

#[test]
fn weighted_edge() {
    let (lb, lw, lr) = (ratio(2, 3), ratio(5, 1), ratio(1, 7));
    let h = h_wr_weighted(lb.clone(), lw.clone(), lr.clone());
    let expected = &lr * &lr + &lw * &lw + &lb * &lb + ratio(2, 1) * &lr * &lw + ratio(2, 1) * &lw * &lb;
    assert_eq!(all_engines(&complete(2), &h).into_rational(), expected);
}

#[test]
fn single_vertex_sums_weights() {
    let h = h_wr_weighted(ratio(1, 2), ratio(1, 3), ratio(1, 6));
    assert_eq!(partition_z(&SimpleGraph::empty(1), &h), ExactValue::one());
    let h = h_wr_weighted(ratio(3, 2), ratio(1, 3), ratio(1, 6));
    assert_eq!(partition_z(&SimpleGraph::empty(1), &h).into_rational(), ratio(2, 1));
}

#[test]
fn hom_count_ignores_weights() {
    let h = h_wr_weighted(ratio(3, 2), ratio(1, 3), ratio(1, 6));
    assert_eq!(hom_count(&cycle(4), &h), value(35));
}

#[test]
fn path_source_matches_transfer_matrix() {
    // transfer matrix of H_WR: [[1,1,0],[1,1,1],[0,1,1]]
    let t = [[1u64, 1, 0], [1, 1, 1], [0, 1, 1]];
    let mut vec_ = [1u64; 3];
    for k in 1..=9usize {
        let g = path(k);
        assert_eq!(hom_count_dp(&g, &h_wr(), &(0..k).collect::<Vec<_>>()).unwrap(), value(vec_.iter().sum()));
        let mut next = [0u64; 3];
        for i in 0..3 {
            for j in 0..3 {
                next[j] += vec_[i] * t[i][j];
            }
        }
        vec_ = next;
    }
}

#[test]
fn dp_errors() {
    let g = cycle(4);
    assert_eq!(hom_count_dp(&g, &h_wr(), &[0, 1, 2]), Err(DpError::InvalidOrder));
    assert_eq!(hom_count_dp(&g, &h_wr(), &[0, 1, 2, 2]), Err(DpError::InvalidOrder));
    let k15 = complete(15);
    assert!(matches!(hom_count_dp(&k15, &h_wr(), &(0..15).collect::<Vec<_>>()), Err(DpError::WidthExceeded { width: 14, cap: WIDTH_CAP })));
    // fast path falls back; K_15 into H_WR: clique images {r,w} or {w,b}
    assert_eq!(partition_z_fast(&k15, &h_wr()), value((1 << 16) - 1));
}

#[test]
fn zb_values() {
    let p2 = BipartiteTarget::from_simple(&path(2)).unwrap();
    let k2 = BipartiteTarget::from_simple(&complete(2)).unwrap();
    assert_eq!(partition_zb(&k2, &p2), value(1));
    let c4 = BipartiteTarget::from_simple(&cycle(4)).unwrap();
    let p4 = BipartiteTarget::from_simple(&path(4)).unwrap();
    assert_eq!(brute_force_zb(&c4, &p4), value(7));
    assert_eq!(partition_zb(&c4, &p4), value(7));
    assert_eq!(partition_zb_backtrack(&c4, &p4), value(7));
}

#[test]
fn wr_is_hard_core_on_double_cover() {
    for g in [cycle(4), cycle(5), complete(4), complete(3), path(5), crate::constructions::petersen()] {
        let gp = double_cover_plus_matching(&g).to_simple();
        let lhs = partition_z_fast(&g, &h_wr());
        assert_eq!(lhs, partition_z_fast(&gp, &h_ind()));
        if gp.n() <= 16 {
            assert_eq!(lhs, value(independent_sets(&gp)));
        }
    }
}

#[test]
fn compare_examples() {
    let c = compare_normalized(&cycle(6), &cycle(6), &h_wr());
    assert_eq!(c.outcome, Ordering::Equal);
    // 199^3 vs 15^6
    let c = compare_normalized(&cycle(6), &complete(3), &h_wr());
    assert_eq!(c.outcome, Ordering::Less);
    assert_eq!(c.exponents, (3, 6));
    assert_eq!(compare_values(&value(0), 3, &value(0), 4).outcome, Ordering::Equal);
    assert_eq!(compare_values(&value(0), 3, &value(5), 4).outcome, Ordering::Less);
    assert_eq!(compare_values(&value(5), 3, &value(0), 4).outcome, Ordering::Greater);
}

#[test]
fn scaling_weights() {
    let h = h_wr_weighted(ratio(2, 3), ratio(5, 1), ratio(1, 7));
    let c = ratio(3, 4);
    for g in [cycle(5), complete(4), path(3)] {
        let z = partition_z(&g, &h).into_rational();
        let zs = partition_z(&g, &h.scaled(&c)).into_rational();
        let factor: Rational = num_traits::Pow::pow(&c, g.n());
        assert_eq!(zs, z * factor);
    }
    let a = compare_normalized(&cycle(5), &complete(4), &h);
    let b = compare_normalized(&cycle(5), &complete(4), &h.scaled(&c));
    assert_eq!(a.outcome, b.outcome);
}

#[test]
fn closed_forms_match_brute_force() {
    let targets = [
        h_wr(),
        h_ind(),
        add_loops(&TargetGraph::from(&star(6))),
        add_loops(&TargetGraph::from(&star(4))),
        TargetGraph::from(&cycle(5)),
        h_wr_weighted(ratio(2, 3), ratio(5, 1), ratio(1, 7)),
        TargetGraph::from_edges(3, &[(0, 0), (0, 1), (1, 2), (2, 0)]).unwrap(),
    ];
    for h in &targets {
        for d in 0..=4 {
            assert_eq!(complete_z(d + 1, h).unwrap(), brute_force_z(&complete(d + 1), h), "K_{}", d + 1);
            if d >= 1 {
                assert_eq!(complete_bipartite_z(d, d, h).unwrap(), brute_force_z(&complete_bipartite(d, d), h));
            }
        }
        assert_eq!(complete_bipartite_z(2, 3, h).unwrap(), brute_force_z(&complete_bipartite(2, 3), h));
        assert_eq!(complete_bipartite_z(0, 2, h).unwrap(), brute_force_z(&SimpleGraph::empty(2), h));
    }
}

#[test]
fn looped_star_closed_forms() {
    // K_m into S_k^o: (k-1)(2^m - 1) + 1; K_{d,d}: 2k^d - 1 + (k-1)(2^d - 1)^2
    for k in 3..=7u64 {
        let h = add_loops(&TargetGraph::from(&star(k as usize)));
        for d in 1..=6u32 {
            let km = (k - 1) * ((1 << (d + 1)) - 1) + 1;
            let kdd = 2 * k.pow(d) - 1 + (k - 1) * ((1 << d) - 1) * ((1 << d) - 1);
            assert_eq!(complete_z(d as usize + 1, &h).unwrap(), value(km));
            assert_eq!(complete_bipartite_z(d as usize, d as usize, &h).unwrap(), value(kdd));
        }
    }
}

#[test]
fn widths() {
    let c = cycle(6);
    let order = min_degree_order(c.adjacency());
    assert_eq!(order[0], 0);
    assert_eq!(elimination_width(c.adjacency(), &order), 2);
    assert_eq!(elimination_width(complete(5).adjacency(), &[0, 1, 2, 3, 4]), 4);
    let _ = vec![0];
}
