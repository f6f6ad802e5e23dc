//! Builds each named graph family and prints its structural profile.
//!
//! Run with: cargo run --example families

use rainbowdom::graph::{
    cartesian_product, classify_spider, corona, cycle_graph, double_star_graph, l_k_graph,
    path_graph, spider_graph, star_graph, structural_profile, Graph,
};

fn show(name: &str, g: &Graph) {
    let p = structural_profile(g);
    println!(
        "{name:12} n={:2} m={:2} diam={:?} leaves={} penultimate={} maxdeg={} tree={}",
        g.n(),
        g.edge_count(),
        p.diameter,
        p.leaf_count,
        p.penultimate_count,
        p.max_degree,
        p.is_tree
    );
}

fn main() {
    show("P7", &path_graph(7).unwrap());
    show("C6", &cycle_graph(6).unwrap());
    show("K_{1,5}", &star_graph(5).unwrap());
    show("DS_{4,4}", &double_star_graph(4, 4).unwrap());
    show("L_5", &l_k_graph(5).unwrap());
    show("C4∘K1", &corona(&cycle_graph(4).unwrap()).unwrap());
    show(
        "P4□P3",
        &cartesian_product(&path_graph(4).unwrap(), &path_graph(3).unwrap()).unwrap(),
    );

    let spider = spider_graph(3, 2).unwrap();
    show("spider(3,2)", &spider);
    let shape = classify_spider(&spider).unwrap();
    println!(
        "spider(3,2) classifies back to x={} y={} center={}",
        shape.x, shape.y, shape.center
    );
}
