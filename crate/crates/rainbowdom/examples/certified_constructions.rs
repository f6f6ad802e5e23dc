//! Produces 2-rainbow assignments from the constructive arguments; each one
//! re-verifies its validity and claimed weight bound before returning.
//!
//! Run with: cargo run --example certified_constructions

use rainbowdom::construct::{diametral_rdf, path_rdf, spider_rdf, tree_rdf_three_quarters};
use rainbowdom::graph::{cycle_graph, l_k_graph, spider_graph, star_graph};

fn main() {
    for n in [1usize, 5, 8, 13] {
        let built = path_rdf(n).unwrap();
        println!(
            "path_rdf({n}): weight {} = floor({n}/2)+1, pattern {}",
            built.weight(),
            serde_json::to_string(&built.assignment).unwrap()
        );
    }

    for (x, y) in [(3, 0), (2, 0), (1, 1), (0, 5)] {
        let g = spider_graph(x, y).unwrap();
        let built = spider_rdf(&g).unwrap();
        println!(
            "spider({x},{y}) n={}: weight {} <= {} via {:?}",
            g.n(),
            built.weight(),
            built.claimed_bound,
            built.provenance
        );
    }

    for k in [1usize, 3, 5] {
        let t = l_k_graph(k).unwrap();
        let built = tree_rdf_three_quarters(&t).unwrap();
        println!(
            "tree_rdf_three_quarters(L_{k}) n={}: weight {} <= 3n/4 = {}",
            t.n(),
            built.weight(),
            built.claimed_bound
        );
    }

    let c9 = cycle_graph(9).unwrap();
    let built = diametral_rdf(&c9).unwrap();
    println!(
        "diametral_rdf(C9): weight {} <= n - floor((diam-1)/2) = {}",
        built.weight(),
        built.claimed_bound
    );

    let star = star_graph(6).unwrap();
    let built = diametral_rdf(&star).unwrap();
    println!(
        "diametral_rdf(K_{{1,6}}): weight {} <= {}",
        built.weight(),
        built.claimed_bound
    );
}
