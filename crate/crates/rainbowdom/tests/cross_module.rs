//! Cross-module consistency: the constructions, recognizers, solvers and
//! scan harness must tell one coherent story about which graphs are
//! extremal and what the optimal weights are.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbowdom::cli::{scan, Family, Predicate, ScanSpec};
use rainbowdom::construct::tree_rdf_three_quarters;
use rainbowdom::construct::path_rdf;
use rainbowdom::enumerate::{all_trees, random_connected};
use rainbowdom::extremal::{recognize_extremal_graph, recognize_extremal_tree};
use rainbowdom::graph::{l_k_graph, path_graph};
use rainbowdom::solver::{rainbow_domination_number, tree_rainbow2};

#[test]
fn construction_is_tight_exactly_on_recognized_trees() {
    for n in 3..=11usize {
        for t in all_trees(n) {
            let built = tree_rdf_three_quarters(&t).unwrap();
            let tight = 4 * built.weight() as usize == 3 * n;
            let recognized = recognize_extremal_tree(&t).unwrap().is_some();
            assert_eq!(
                tight, recognized,
                "construction weight {} on a tree of order {n}",
                built.weight()
            );
        }
    }
}

#[test]
fn path_construction_matches_branch_and_bound_to_24() {
    for n in 1..=24usize {
        let built = path_rdf(n).unwrap();
        let solved = rainbow_domination_number(&path_graph(n).unwrap(), 2).unwrap();
        assert_eq!(built.weight(), solved.value, "P_{n}");
    }
}

#[test]
fn recognizer_matches_optimum_on_random_connected_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(1012);
    for i in 0..150 {
        let n = rng.gen_range(3..=10);
        let p = rng.gen_range(0.2..0.8);
        let g = random_connected(n, p, &mut rng);
        let value = rainbow_domination_number(&g, 2).unwrap().value as usize;
        let accepted = recognize_extremal_graph(&g).unwrap().is_some();
        assert_eq!(
            accepted,
            4 * value == 3 * n,
            "recognizer vs optimum on random graph {i} (n = {n})"
        );
    }
}

#[test]
fn recognizer_matches_optimum_on_l_family() {
    for k in 1..=3usize {
        let g = l_k_graph(k).unwrap();
        assert_eq!(tree_rainbow2(&g).unwrap().value as usize, 3 * k);
        assert!(recognize_extremal_graph(&g).unwrap().is_some());
    }
}

#[test]
fn scan_tightness_census_matches_recognizer() {
    let spec = ScanSpec {
        family: Family::AllTrees,
        size_range: (4, 8),
        predicate: Predicate::Tight3n4,
        seed: 0,
        sample_count: 0,
    };
    let report = scan(&spec).unwrap();
    // Exactly P4 and the two-copy center-joined tree are tight in range.
    assert_eq!(report.hits.len(), 2);
    assert!(report.violations.is_empty());
    for hit in &report.hits {
        assert_eq!(hit.values["tight"], true);
        assert_eq!(hit.values["recognized"], true);
    }
}
