mod common;

use common::{all_graphs_up_to, permutations, TestRng};
use homlab_core::canon::{are_isomorphic, canonical_form};
use homlab_core::constructions::{add_loops, complete, cycle, extended_line_graph, h_ind, h_wr, path, petersen};
use homlab_core::{BipartiteTarget, SimpleGraph, TargetGraph};
use proptest::prelude::*;

/// Exhaustive oracle: does some permutation map `x` onto `y`?
fn brute_isomorphic(x: &TargetGraph, y: &TargetGraph) -> bool {
    x.n() == y.n() && permutations(x.n()).iter().any(|p| &x.permuted(p) == y)
}

#[test]
fn invariant_under_every_relabelling() {
    let mut rng = TestRng::seeded(7);
    for n in 0..=7 {
        for trial in 0..3 {
            let g = rng.target(n, 35 + 15 * trial, trial == 2);
            let form = canonical_form(&g).unwrap();
            for p in permutations(n) {
                assert_eq!(canonical_form(&g.permuted(&p)).unwrap(), form, "n={n} perm={p:?}");
            }
        }
    }
}

#[test]
fn forms_separate_all_graphs_on_seven_vertices() {
    // the generator deduplicates by canonical form, so the class counts are the
    // test: 1, 1, 2, 4, 11, 34, 156, 1044
    let levels = all_graphs_up_to(7);
    let counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn isomorphism_agrees_with_forms_and_brute_force() {
    let levels = all_graphs_up_to(5);
    let graphs: Vec<TargetGraph> = levels.iter().flatten().map(TargetGraph::from).collect();
    let mut rng = TestRng::seeded(11);
    for x in &graphs {
        for y in graphs.iter().filter(|y| y.n() == x.n()) {
            let y = y.permuted(&rng.permutation(y.n()));
            let iso = are_isomorphic(x, &y);
            assert_eq!(iso, brute_isomorphic(x, &y));
            assert_eq!(iso, canonical_form(x).unwrap() == canonical_form(&y).unwrap());
        }
    }
}

#[test]
fn named_examples() {
    let wr = h_wr();
    assert!(are_isomorphic(&wr, &wr.permuted(&[2, 0, 1])));
    assert!(!are_isomorphic(&h_ind(), &wr));
    let p4 = BipartiteTarget::from_simple(&path(4)).unwrap();
    assert_eq!(canonical_form(&wr).unwrap(), canonical_form(&extended_line_graph(&p4)).unwrap());
    let c4 = BipartiteTarget::from_simple(&cycle(4)).unwrap();
    let k4o = add_loops(&TargetGraph::from(&complete(4)));
    let ext = extended_line_graph(&c4);
    assert!(brute_isomorphic(&ext, &k4o));
    assert!(are_isomorphic(&ext, &k4o));
}

#[test]
fn symmetric_graphs_canonicalize_quickly() {
    // large automorphism groups exercise orbit pruning
    let three_k4 = complete(4).disjoint_union(&complete(4)).disjoint_union(&complete(4));
    let f = canonical_form(&three_k4).unwrap();
    assert_eq!(canonical_form(&three_k4.permuted(&TestRng::seeded(3).permutation(12))).unwrap(), f);
    let empty = SimpleGraph::empty(16);
    assert_eq!(canonical_form(&empty).unwrap(), canonical_form(&empty.permuted(&TestRng::seeded(5).permutation(16))).unwrap());
    let pet = petersen();
    assert_eq!(canonical_form(&pet).unwrap(), canonical_form(&pet.permuted(&TestRng::seeded(9).permutation(10))).unwrap());
    assert!(are_isomorphic(&TargetGraph::from(&pet), &TargetGraph::from(&pet.permuted(&TestRng::seeded(1).permutation(10)))));
}

proptest! {
    #[test]
    fn relabelled_targets_stay_isomorphic(seed in any::<u64>(), n in 1usize..12) {
        let mut rng = TestRng::seeded(seed);
        let g = rng.target(n, 40, seed % 2 == 0);
        let h = g.permuted(&rng.permutation(n));
        prop_assert!(are_isomorphic(&g, &h));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn isomorphism_iff_equal_forms(seed in any::<u64>(), n in 1usize..9) {
        let mut rng = TestRng::seeded(seed);
        let g = rng.target(n, 50, false);
        let h = rng.target(n, 50, false);
        prop_assert_eq!(are_isomorphic(&g, &h), canonical_form(&g).unwrap() == canonical_form(&h).unwrap());
    }
}
