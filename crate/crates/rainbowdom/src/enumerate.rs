//! Instance generation for scans and tests: non-isomorphic free trees by
//! canonical-parent (orderly) generation, uniform random labeled trees, and
//! rejection-sampled random connected graphs.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;

use crate::graph::{Graph, Vertex};

/// Rooted AHU code: children codes sorted and wrapped.
fn rooted_code(t: &Graph, v: Vertex, parent: Option<Vertex>) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = t
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| Some(w) != parent)
        .map(|w| rooted_code(t, w, Some(v)))
        .collect();
    kids.sort();
    let mut code = vec![b'('];
    for k in kids {
        code.extend(k);
    }
    code.push(b')');
    code
}

/// Center(s) of a tree by iterated leaf removal.
fn centers(t: &Graph) -> Vec<Vertex> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    let mut removed = vec![false; n];
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for &w in t.neighbors(v) {
                if !removed[w] {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    let mut out: Vec<Vertex> = (0..n).filter(|&v| !removed[v]).collect();
    out.sort_unstable();
    out
}

/// Isomorphism-invariant code of a free tree.
pub fn canonical_code(t: &Graph) -> Vec<u8> {
    debug_assert!(t.is_tree());
    let c = centers(t);
    match c.as_slice() {
        [single] => rooted_code(t, *single, None),
        [c1, c2] => {
            let a = rooted_code(t, *c1, Some(*c2));
            let b = rooted_code(t, *c2, Some(*c1));
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            let mut code = vec![b'['];
            code.extend(lo);
            code.extend(hi);
            code.push(b']');
            code
        }
        _ => unreachable!("trees have one or two centers"),
    }
}

fn with_leaf_at(t: &Graph, u: Vertex) -> Graph {
    let mut edges = t.edges();
    edges.push((u, t.n()));
    Graph::from_edge_list(t.n() + 1, &edges).expect("attaching a leaf keeps the graph simple")
}

/// The canonical parent of a tree with at least 2 vertices: the code of the
/// smallest-coded leaf removal.
fn canonical_parent_code(t: &Graph) -> Vec<u8> {
    (0..t.n())
        .filter(|&v| t.is_leaf(v))
        .map(|v| {
            let keep: Vec<Vertex> = (0..t.n()).filter(|&x| x != v).collect();
            canonical_code(&t.induced(&keep).0)
        })
        .min()
        .expect("every tree on >= 2 vertices has a leaf")
}

/// All non-isomorphic free trees on `n` vertices. Generation is orderly:
/// a candidate built by attaching a leaf to a parent tree survives only if
/// that parent is its canonical parent, so each isomorphism class appears
/// exactly once.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::from_edge_list(1, &[]).expect("K1 exists")];
    for _size in 2..=n {
        let mut next = Vec::new();
        for parent in &level {
            let parent_code = canonical_code(parent);
            let mut emitted: HashSet<Vec<u8>> = HashSet::new();
            for u in 0..parent.n() {
                let candidate = with_leaf_at(parent, u);
                let code = canonical_code(&candidate);
                if emitted.contains(&code) {
                    continue;
                }
                if canonical_parent_code(&candidate) == parent_code {
                    emitted.insert(code);
                    next.push(candidate);
                }
            }
        }
        level = next;
    }
    level
}

/// Uniform random labeled tree via a random Pruefer sequence.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::from_edge_list(1, &[]).expect("K1 exists");
    }
    if n == 2 {
        return Graph::from_edge_list(2, &[(0, 1)]).expect("P2 exists");
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = *leaves.iter().next().expect("Pruefer decode keeps a leaf");
        leaves.remove(&leaf);
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let mut last = leaves.into_iter();
    let (a, b) = (last.next().unwrap(), last.next().unwrap());
    edges.push((a, b));
    Graph::from_edge_list(n, &edges).expect("Pruefer decodes to a tree")
}

/// Random connected graph: edge-probability sampling, rejected until
/// connected.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 1);
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(n, &edges).expect("sampled graph is simple");
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn tree_counts_match_the_census() {
        let expected = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];
        for (i, &want) in expected.iter().enumerate() {
            assert_eq!(all_trees(i + 1).len(), want, "n = {}", i + 1);
        }
    }

    #[test]
    fn eleven_vertex_count() {
        assert_eq!(all_trees(11).len(), 235);
    }

    #[test]
    fn generated_trees_are_trees_with_distinct_codes() {
        for n in 1..=9 {
            let trees = all_trees(n);
            let mut codes = HashSet::new();
            for t in &trees {
                assert!(t.is_tree());
                assert_eq!(t.n(), n);
                assert!(codes.insert(canonical_code(t)), "duplicate class at n={n}");
            }
        }
    }

    #[test]
    fn canonical_code_is_label_invariant() {
        let a = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (2, 4)]).unwrap();
        let b = Graph::from_edge_list(5, &[(4, 3), (3, 0), (0, 2), (0, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let p5 = crate::graph::path_graph(5).unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&p5));
    }

    #[test]
    fn random_trees_are_deterministic_per_seed() {
        let mut r1 = ChaCha8Rng::seed_from_u64(7);
        let mut r2 = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 2, 5, 12, 30] {
            let a = random_tree(n, &mut r1);
            let b = random_tree(n, &mut r2);
            assert!(a.is_tree());
            assert_eq!(a, b);
        }
    }

    #[test]
    fn random_connected_is_connected_and_seeded() {
        let mut r1 = ChaCha8Rng::seed_from_u64(99);
        let mut r2 = ChaCha8Rng::seed_from_u64(99);
        for n in [1, 2, 6, 9] {
            let a = random_connected(n, 0.4, &mut r1);
            let b = random_connected(n, 0.4, &mut r2);
            assert!(a.is_connected());
            assert_eq!(a, b);
        }
    }
}
