//! Recognizes graphs attaining gamma_r2 = 3n/4 and prints their P4-partition
//! certificates.
//!
//! Run with: cargo run --example extremal_certificates

use rainbowdom::extremal::{recognize_extremal_graph, verify_certificate, ExtremalWitness};
use rainbowdom::graph::{corona, cycle_graph, l_k_graph, path_graph, star_graph, Graph};

fn recognize(name: &str, g: &Graph) {
    match recognize_extremal_graph(g).unwrap() {
        Some(ExtremalWitness::Partition(cert)) => {
            verify_certificate(g, &cert).expect("returned certificates verify");
            println!(
                "{name:8} extremal: {} parts, centers {:?}",
                cert.parts.len(),
                cert.centers
            );
            for part in &cert.parts {
                println!("         part {part:?}");
            }
        }
        Some(ExtremalWitness::CoronaC4) => {
            println!("{name:8} extremal: isomorphic to C4∘K1 (the one graph with no P4-partition certificate)");
        }
        None => println!("{name:8} not extremal"),
    }
}

fn main() {
    recognize("P4", &path_graph(4).unwrap());
    recognize("L_5", &l_k_graph(5).unwrap());
    recognize("C4∘K1", &corona(&cycle_graph(4).unwrap()).unwrap());
    recognize("P8", &path_graph(8).unwrap());
    recognize("C8", &cycle_graph(8).unwrap());
    recognize("K_{1,7}", &star_graph(7).unwrap());

    // Non-tree on 12 vertices: three P4 copies whose centers form a triangle.
    let mut edges = Vec::new();
    for i in 0..3usize {
        let b = 4 * i;
        edges.extend([(b, b + 1), (b + 1, b + 2), (b + 2, b + 3)]);
    }
    edges.extend([(1, 5), (5, 9), (9, 1)]);
    let triangle_of_copies = Graph::from_edge_list(12, &edges).unwrap();
    recognize("3xP4+C3", &triangle_of_copies);
}
