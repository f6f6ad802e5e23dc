//! Property tests for the structural invariants: encoding round trips, the
//! partition identities, validity monotonicity, the Roman and dominating-set
//! embeddings, and edge-perturbation monotonicity of γ_r2.

use proptest::prelude::*;

use rainbowdom::enumerate::random_connected;
use rainbowdom::graph::io::{from_graph6, to_graph6};
use rainbowdom::graph::{cartesian_product, Graph};
use rainbowdom::labeling::{
    dominating_to_rainbow, induced_partition, is_dominating, is_valid_krdf, is_valid_roman,
    rainbow_from_color_lists, ColorSet, RainbowAssignment, RomanAssignment, VertexSet,
};
use rainbowdom::solver::{brute_rainbow, domination_number, rainbow_domination_number};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Graph on `n` vertices whose pair (i, j) is an edge iff the matching bit
/// of `mask` is set.
fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> (t % 64) & 1 == 1 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("mask graphs are simple")
}

fn rainbow_from_code(n: usize, k: u8, code: u64) -> RainbowAssignment {
    let mask = (1u64 << k) - 1;
    let colors = (0..n)
        .map(|v| ColorSet::from_bits((code >> (k as usize * v) & mask) as u8))
        .collect();
    RainbowAssignment::new(k, colors).expect("codes stay within k bits")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trip(n in 1usize..=16, mask in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let enc = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&enc).unwrap(), g);
    }

    #[test]
    fn product_degree_law(n1 in 1usize..=5, m1 in any::<u64>(), n2 in 1usize..=5, m2 in any::<u64>()) {
        let g = graph_from_mask(n1, m1);
        let h = graph_from_mask(n2, m2);
        let p = cartesian_product(&g, &h).unwrap();
        for a in 0..n1 {
            for b in 0..n2 {
                prop_assert_eq!(p.degree(a * n2 + b), g.degree(a) + h.degree(b));
            }
        }
    }

    #[test]
    fn partition_is_a_partition_with_the_weight_identity(n in 1usize..=10, code in any::<u64>()) {
        let f = rainbow_from_code(n, 2, code);
        let parts = induced_partition(&f).unwrap();
        prop_assert_eq!(
            parts.v0.len() + parts.v1_1.len() + parts.v1_2.len() + parts.v2.len(),
            n
        );
        let mut seen = VertexSet::EMPTY;
        for set in [parts.v0, parts.v1_1, parts.v1_2, parts.v2] {
            for v in set.iter() {
                prop_assert!(!seen.contains(v), "partition parts overlap");
                seen.insert(v);
            }
        }
        prop_assert_eq!(
            f.weight() as usize,
            parts.v1_1.len() + parts.v1_2.len() + 2 * parts.v2.len()
        );
    }

    #[test]
    fn enlarging_a_color_set_keeps_validity(
        n in 2usize..=6,
        mask in any::<u64>(),
        code in any::<u64>(),
        v in 0usize..6,
        extra in 1u8..=2,
    ) {
        let g = graph_from_mask(n, mask);
        let mut f = rainbow_from_code(n, 2, code);
        prop_assume!(is_valid_krdf(&g, &f).unwrap());
        let v = v % n;
        f.set(v, f.get(v).union(ColorSet::single(extra)));
        prop_assert!(is_valid_krdf(&g, &f).unwrap());
    }

    #[test]
    fn valid_roman_embeds_into_rainbow(n in 1usize..=6, mask in any::<u64>(), code in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let mut c = code;
        let values: Vec<u8> = (0..n).map(|_| { let d = (c % 3) as u8; c /= 3; d }).collect();
        let r = RomanAssignment::new(values).unwrap();
        prop_assume!(is_valid_roman(&g, &r).unwrap());
        let f = r.to_rainbow();
        prop_assert!(is_valid_krdf(&g, &f).unwrap());
        prop_assert_eq!(f.weight(), r.weight());
    }

    #[test]
    fn dominating_set_embeds_into_rainbow(n in 1usize..=8, mask in any::<u64>(), set in any::<u64>()) {
        let g = graph_from_mask(n, mask);
        let s = VertexSet::from_mask(set & ((1 << n) - 1));
        prop_assume!(is_dominating(&g, s));
        let f = dominating_to_rainbow(n, s);
        prop_assert!(is_valid_krdf(&g, &f).unwrap());
        prop_assert_eq!(f.weight() as usize, 2 * s.len());
    }

    #[test]
    fn edge_perturbation_is_monotone(n in 2usize..=7, seed in any::<u64>(), pick in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(n, 0.5, &mut rng);
        let base = brute_rainbow(&g, 2).unwrap().value;

        let edges = g.edges();
        if !edges.is_empty() {
            let (u, v) = edges[(pick % edges.len() as u64) as usize];
            let removed = g.without_edge(u, v).unwrap();
            prop_assert!(
                brute_rainbow(&removed, 2).unwrap().value >= base,
                "deleting an edge decreased gamma_r2"
            );
        }

        let non_edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| ((a + 1)..n).map(move |b| (a, b)))
            .filter(|&(a, b)| !g.has_edge(a, b))
            .collect();
        if !non_edges.is_empty() {
            let (u, v) = non_edges[(pick % non_edges.len() as u64) as usize];
            let added = g.with_edge(u, v).unwrap();
            prop_assert!(
                brute_rainbow(&added, 2).unwrap().value <= base,
                "adding an edge increased gamma_r2"
            );
        }
    }

    #[test]
    fn hartnell_rall_for_all_k(n in 1usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(n, 0.5, &mut rng);
        let gamma = domination_number(&g).unwrap().value;
        for k in 1u8..=3 {
            let rk = rainbow_domination_number(&g, k).unwrap().value;
            let lower = (n as u32).min(gamma + k as u32 - 2);
            prop_assert!(lower <= rk, "HR lower failed for k={k}");
            prop_assert!(rk <= k as u32 * gamma, "HR upper failed for k={k}");
        }
    }

    #[test]
    fn rainbow_json_round_trip(n in 1usize..=8, code in any::<u64>()) {
        let f = rainbow_from_code(n, 2, code);
        let json = serde_json::to_string(&f).unwrap();
        let back: RainbowAssignment = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }
}

#[test]
fn rainbow_from_color_lists_rejects_out_of_range() {
    assert!(rainbow_from_color_lists(2, &[vec![3]]).is_err());
    assert!(rainbow_from_color_lists(2, &[vec![1, 2], vec![]]).is_ok());
}
