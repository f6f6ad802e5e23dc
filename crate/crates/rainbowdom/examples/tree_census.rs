//! Enumerates all non-isomorphic trees up to a given order and runs two
//! censuses: which trees attain the 3n/4 upper bound (exactly the
//! recognizer-accepted ones) and which attain the γ + ceil((ℓ-p)/Δ) lower
//! bound (an open characterization).
//!
//! Run with: cargo run --release --example tree_census [max_n]

use rainbowdom::bounds::tree_lower_bound;
use rainbowdom::enumerate::all_trees;
use rainbowdom::extremal::recognize_extremal_tree;
use rainbowdom::graph::io::to_graph6;
use rainbowdom::solver::tree_rainbow2;

fn main() {
    let max_n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    println!("n  trees  tight-3n/4  lower-bound-equal");
    for n in 3..=max_n {
        let trees = all_trees(n);
        let mut tight = Vec::new();
        let mut lower_equal = 0usize;
        for t in &trees {
            let r2 = tree_rainbow2(t).unwrap().value;
            let is_tight = 4 * r2 as usize == 3 * n;
            let recognized = recognize_extremal_tree(t).unwrap().is_some();
            assert_eq!(is_tight, recognized, "census mismatch at n={n}");
            if is_tight {
                tight.push(to_graph6(t).unwrap());
            }
            if r2 == tree_lower_bound(t).unwrap() {
                lower_equal += 1;
            }
        }
        println!(
            "{n:2} {:6} {:11} {:18}   tight: {}",
            trees.len(),
            tight.len(),
            lower_equal,
            tight.join(" ")
        );
    }
}
