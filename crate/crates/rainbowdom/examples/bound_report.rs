//! Evaluates every applicable inequality on a few graphs and prints the
//! holds/tight verdicts.
//!
//! Run with: cargo run --example bound_report

use rainbowdom::bounds::bound_report;
use rainbowdom::graph::{cycle_graph, double_star_graph, l_k_graph, path_graph, Graph};

fn report(name: &str, g: &Graph) {
    let r = bound_report(g).unwrap();
    println!(
        "{name}: n={} gamma={:?} gamma_r2={:?} gamma_roman={:?}",
        r.graph.n, r.values.gamma, r.values.gamma_r2, r.values.gamma_roman
    );
    for e in &r.bounds {
        println!(
            "  {:26} {:3} <= {:>5}   holds={} tight={}",
            e.name,
            e.lhs,
            e.rhs.to_string(),
            e.holds,
            e.tight
        );
    }
    println!();
}

fn main() {
    report("P3 (diameter lower bound tight)", &path_graph(3).unwrap());
    report("P6 (diameter upper bound tight)", &path_graph(6).unwrap());
    report("DS_{4,4} (tree lower bound tight)", &double_star_graph(4, 4).unwrap());
    report("L_3 (3n/4 tight)", &l_k_graph(3).unwrap());
    report("C5", &cycle_graph(5).unwrap());
}
