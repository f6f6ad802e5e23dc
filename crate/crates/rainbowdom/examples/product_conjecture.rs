//! Checks the product inequalities gamma_r2(G□H) >= γ(G)γ(H) (open),
//! gamma_R(G□H) >= γ(G)γ(H) and 2γ(G□H) >= γ(G)γ(H) (theorems) over small
//! factor pairs, by exact solves on products up to 25 vertices.
//!
//! Run with: cargo run --release --example product_conjecture

use rainbowdom::bounds::product_check;
use rainbowdom::graph::{cycle_graph, path_graph, star_graph, Graph};

fn main() {
    let factors: Vec<(&str, Graph)> = vec![
        ("P2", path_graph(2).unwrap()),
        ("P3", path_graph(3).unwrap()),
        ("P4", path_graph(4).unwrap()),
        ("P5", path_graph(5).unwrap()),
        ("C3", cycle_graph(3).unwrap()),
        ("C4", cycle_graph(4).unwrap()),
        ("C5", cycle_graph(5).unwrap()),
        ("K1,3", star_graph(3).unwrap()),
    ];
    let mut candidates = 0usize;
    println!("pair        γG γH  γ(□) γr2(□) γR(□)   r2>=γγ  R>=γγ  2γ>=γγ");
    for i in 0..factors.len() {
        for j in i..factors.len() {
            let (ng, g) = &factors[i];
            let (nh, h) = &factors[j];
            let r = product_check(g, h).unwrap();
            let fmt = |b: Option<bool>| match b {
                Some(true) => "ok",
                Some(false) => "FALSE",
                None => "?",
            };
            println!(
                "{ng:>4} x {nh:<4} {:2} {:2}  {:4} {:6} {:5}   {:>6}  {:>5}  {:>6}",
                r.gamma_g,
                r.gamma_h,
                r.gamma_product.unwrap(),
                r.gamma_r2_product.unwrap(),
                r.gamma_roman_product.unwrap(),
                fmt(r.rainbow_ge_product),
                fmt(r.roman_ge_product),
                fmt(r.doubled_ge_product),
            );
            if r.rainbow_ge_product == Some(false) {
                candidates += 1;
                println!("  ^^ counterexample candidate for the open rainbow product problem!");
            }
        }
    }
    println!("\n{candidates} counterexample candidates found for the open problem");
}
