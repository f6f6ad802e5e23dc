//! Acceptance gates. One test per criterion; each prints a PASS line with
//! the quantities it checked, and any failure pins the exact instance.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rainbowdom::bounds::{product_check, tree_lower_bound};
use rainbowdom::construct::{diametral_rdf, path_rdf, spider_rdf, tree_rdf_three_quarters};
use rainbowdom::enumerate::{all_trees, random_connected, random_tree};
use rainbowdom::extremal::{recognize_extremal_graph, recognize_extremal_tree, ExtremalWitness};
use rainbowdom::graph::{
    corona, cycle_graph, double_star_graph, l_k_graph, path_graph, spider_graph, star_graph,
    structural_profile, Graph,
};
use rainbowdom::labeling::is_valid_krdf;
use rainbowdom::solver::{
    brute_rainbow, rainbow2_via_product, rainbow_domination_number, roman_domination_number,
    domination_number, tree_rainbow2,
};

/// The shared random corpus: 200 seeded connected graphs on at most 8
/// vertices.
fn random_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(20260810);
    (0..200)
        .map(|_| {
            let n = rng.gen_range(1..=8);
            let p = rng.gen_range(0.2..0.8);
            random_connected(n, p, &mut rng)
        })
        .collect()
}

#[test]
fn criterion_1_path_formula() {
    let start = Instant::now();
    for n in 1..=24usize {
        let p = path_graph(n).unwrap();
        let dp = tree_rainbow2(&p).unwrap();
        assert_eq!(dp.value as usize, n / 2 + 1, "tree DP on P_{n}");
        if n <= 12 {
            let brute = brute_rainbow(&p, 2).unwrap();
            assert_eq!(brute.value, dp.value, "brute cross-check on P_{n}");
        }
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(1),
        "path formula checks took {elapsed:?}, budget is 1 s"
    );
    println!(
        "acceptance criterion 1 (path formula, n = 1..24, brute to 12): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_2_three_quarters_census() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut tight: Vec<(usize, usize)> = Vec::new(); // (n, index within size)
    for n in 3..=11usize {
        for (i, t) in all_trees(n).iter().enumerate() {
            checked += 1;
            let value = tree_rainbow2(t).unwrap().value as usize;
            assert!(
                4 * value <= 3 * n,
                "3n/4 bound violated on a tree with n = {n}"
            );
            let is_tight = 4 * value == 3 * n;
            let recognized = recognize_extremal_tree(t).unwrap();
            assert_eq!(
                is_tight,
                recognized.is_some(),
                "tightness and recognition disagree on tree {i} of order {n}"
            );
            if is_tight {
                assert!(n == 4 || n == 8, "tight tree of unexpected order {n}");
                tight.push((n, i));
            }
        }
    }
    assert_eq!(checked, 434, "non-isomorphic trees on 3..=11 vertices");
    assert_eq!(tight.len(), 2, "exactly P4 and the two-copy tree are tight");
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(30),
        "tree census took {elapsed:?}, budget is 30 s"
    );
    println!(
        "acceptance criterion 2 (3n/4 over {checked} trees, tight set size {}): PASS in {elapsed:?}",
        tight.len()
    );
}

#[test]
fn criterion_3_oracle_triangle() {
    let start = Instant::now();
    let corpus = random_corpus();
    let mut tree_count = 0usize;
    for (i, g) in corpus.iter().enumerate() {
        let brute = brute_rainbow(g, 2).unwrap().value;
        let bb = rainbow_domination_number(g, 2).unwrap().value;
        let via = rainbow2_via_product(g).unwrap().value;
        assert_eq!(brute, bb, "brute vs branch-and-bound on corpus graph {i}");
        assert_eq!(brute, via, "brute vs product oracle on corpus graph {i}");
        if g.is_tree() {
            tree_count += 1;
            let dp = tree_rainbow2(g).unwrap().value;
            assert_eq!(brute, dp, "brute vs tree DP on corpus graph {i}");
        }
    }
    println!(
        "acceptance criterion 3 (oracle triangle on {} graphs, {tree_count} trees): PASS in {:?}",
        corpus.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_4_sandwich_and_hartnell_rall() {
    let start = Instant::now();
    let corpus = random_corpus();
    for (i, g) in corpus.iter().enumerate() {
        let gamma = domination_number(g).unwrap().value;
        let r2 = rainbow_domination_number(g, 2).unwrap().value;
        let roman = roman_domination_number(g).unwrap().value;
        assert!(
            gamma <= r2 && r2 <= roman && roman <= 2 * gamma,
            "sandwich chain failed on corpus graph {i}: {gamma} {r2} {roman}"
        );
        let hr_lower = (g.n() as u32).min(gamma);
        assert!(
            hr_lower <= r2 && r2 <= 2 * gamma,
            "Hartnell-Rall bounds failed on corpus graph {i}"
        );
    }
    println!(
        "acceptance criterion 4 (sandwich + Hartnell-Rall on {} graphs): PASS in {:?}",
        corpus.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_5_diameter_bounds() {
    let start = Instant::now();
    let corpus = random_corpus();
    for (i, g) in corpus.iter().enumerate() {
        let r2 = rainbow_domination_number(g, 2).unwrap().value as i64;
        let diam = structural_profile(g).diameter.expect("corpus is connected") as i64;
        let lower = (2 * diam + 2 + 4) / 5; // ceil((2d + 2) / 5)
        let upper = g.n() as i64 - (diam - 1).div_euclid(2);
        assert!(
            lower <= r2 && r2 <= upper,
            "diameter bounds failed on corpus graph {i}: {lower} <= {r2} <= {upper}"
        );
    }
    // Stated sharpness cases.
    for (g, expect) in [
        (path_graph(3).unwrap(), 2u32),
        (cycle_graph(4).unwrap(), 2),
    ] {
        let r2 = rainbow_domination_number(&g, 2).unwrap().value;
        let diam = structural_profile(&g).diameter.unwrap() as i64;
        assert_eq!(r2, expect);
        assert_eq!((2 * diam + 2 + 4) / 5, expect as i64, "lower bound tight");
    }
    for n in [6usize, 8, 10] {
        let p = path_graph(n).unwrap();
        let r2 = tree_rainbow2(&p).unwrap().value as i64;
        let diam = (n - 1) as i64;
        assert_eq!(
            r2,
            n as i64 - (diam - 1).div_euclid(2),
            "upper bound tight on P_{n}"
        );
    }
    println!(
        "acceptance criterion 5 (diameter bounds on {} graphs + sharpness): PASS in {:?}",
        corpus.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_6_tree_lower_bound() {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut check = |t: &Graph, require_equality: bool, label: &str| {
        let lower = tree_lower_bound(t).unwrap();
        let r2 = tree_rainbow2(t).unwrap().value;
        assert!(r2 >= lower, "tree lower bound violated on {label}");
        if require_equality {
            assert_eq!(r2, lower, "stated equality family failed on {label}");
        }
        checked += 1;
    };
    for n in 3..=11usize {
        for t in all_trees(n) {
            check(&t, false, &format!("a tree of order {n}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for i in 0..100 {
        let n = rng.gen_range(3..=16);
        let t = random_tree(n, &mut rng);
        check(&t, false, &format!("random tree {i}"));
    }
    for r in 2..=6usize {
        check(&star_graph(r).unwrap(), true, &format!("K_1_{r}"));
    }
    for (r, s) in [(4, 4), (5, 4), (5, 5)] {
        check(
            &double_star_graph(r, s).unwrap(),
            true,
            &format!("DS_{r}_{s}"),
        );
    }
    for r in 2..=5usize {
        check(&double_star_graph(r, 1).unwrap(), true, &format!("DS_{r}_1"));
    }
    println!(
        "acceptance criterion 6 (tree lower bound on {checked} trees incl. equality families): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_7_constructions_self_verify() {
    let start = Instant::now();
    let mut built = 0usize;
    let mut certify_externally = |g: &Graph, c: &rainbowdom::construct::ConstructedRdf| {
        assert!(is_valid_krdf(g, &c.assignment).unwrap());
        let weight = num_rational::Ratio::from_integer(c.assignment.weight() as i64);
        assert!(weight <= c.claimed_bound, "claimed bound missed");
        built += 1;
    };
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let n = rng.gen_range(3..=40);
        let t = random_tree(n, &mut rng);
        let tree = tree_rdf_three_quarters(&t).expect("tree construction self-verifies");
        certify_externally(&t, &tree);
        let diam = diametral_rdf(&t).expect("diametral construction self-verifies");
        certify_externally(&t, &diam);
    }
    for x in 0..=8usize {
        for y in 0..=(8 - x) {
            if x + y < 2 {
                continue;
            }
            let g = spider_graph(x, y).unwrap();
            let s = spider_rdf(&g).expect("spider construction self-verifies");
            certify_externally(&g, &s);
        }
    }
    for n in 1..=40usize {
        let built_path = path_rdf(n).expect("path pattern self-verifies");
        assert_eq!(built_path.assignment.weight() as usize, n / 2 + 1);
        certify_externally(&path_graph(n).unwrap(), &built_path);
    }
    for n in 3..=40usize {
        let c = cycle_graph(n).unwrap();
        let built_cycle = diametral_rdf(&c).expect("diametral construction on cycles");
        certify_externally(&c, &built_cycle);
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(60),
        "construction sweep took {elapsed:?}, budget is 60 s"
    );
    println!(
        "acceptance criterion 7 ({built} certified constructions, zero failures): PASS in {elapsed:?}"
    );
}

#[test]
fn criterion_8_extremal_families() {
    let start = Instant::now();
    for k in 1..=5usize {
        let lk = l_k_graph(k).unwrap();
        let t = Instant::now();
        let value = tree_rainbow2(&lk).unwrap().value as usize;
        let solve_time = t.elapsed();
        assert_eq!(value, 3 * k, "gamma_r2(L_{k})");
        if k == 5 {
            assert!(
                solve_time < Duration::from_secs(1),
                "L_5 tree DP took {solve_time:?}, budget is 1 s"
            );
        }
        assert!(recognize_extremal_tree(&lk).unwrap().is_some());
    }

    let c4k1 = corona(&cycle_graph(4).unwrap()).unwrap();
    assert_eq!(rainbow_domination_number(&c4k1, 2).unwrap().value, 6);
    assert_eq!(
        recognize_extremal_graph(&c4k1).unwrap(),
        Some(ExtremalWitness::CoronaC4)
    );

    let p8 = path_graph(8).unwrap();
    assert_eq!(tree_rainbow2(&p8).unwrap().value, 5);
    assert!(recognize_extremal_tree(&p8).unwrap().is_none());
    println!(
        "acceptance criterion 8 (L_1..L_5 at 3k, corona accepted at 6, P8 rejected at 5): PASS in {:?}",
        start.elapsed()
    );
}

#[test]
fn criterion_9_product_inequalities() {
    let start = Instant::now();
    let factors: Vec<(&str, Graph)> = vec![
        ("P2", path_graph(2).unwrap()),
        ("P3", path_graph(3).unwrap()),
        ("P4", path_graph(4).unwrap()),
        ("P5", path_graph(5).unwrap()),
        ("C3", cycle_graph(3).unwrap()),
        ("C4", cycle_graph(4).unwrap()),
        ("C5", cycle_graph(5).unwrap()),
        ("K1_3", star_graph(3).unwrap()),
    ];
    let mut candidates = Vec::new();
    let mut pairs = 0usize;
    for i in 0..factors.len() {
        for j in i..factors.len() {
            pairs += 1;
            let (name_g, g) = &factors[i];
            let (name_h, h) = &factors[j];
            let report = product_check(g, h).unwrap();
            assert_eq!(
                report.roman_ge_product,
                Some(true),
                "Roman product theorem failed on {name_g} x {name_h}"
            );
            assert_eq!(
                report.doubled_ge_product,
                Some(true),
                "doubled domination theorem failed on {name_g} x {name_h}"
            );
            // The rainbow inequality is an open problem: violations are
            // counterexample candidates, reported rather than asserted.
            if report.rainbow_ge_product == Some(false) {
                candidates.push(format!("{name_g} x {name_h}: {report:?}"));
            }
        }
    }
    for c in &candidates {
        println!("COUNTEREXAMPLE CANDIDATE for the rainbow product inequality: {c}");
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(600),
        "product sweep took {elapsed:?}, budget is 10 min"
    );
    println!(
        "acceptance criterion 9 ({pairs} product pairs, {} rainbow counterexample candidates): PASS in {elapsed:?}",
        candidates.len()
    );
}
