//! Named graph families with canonical vertex labelings.

use super::{Graph, GraphError, Vertex, PRODUCT_SIZE_CAP};

/// Path `P_n` on vertices `0..n` in index order.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::TooSmall {
            family: "path",
            what: "order",
            min: 1,
            got: n,
        });
    }
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edge_list(n, &edges)
}

/// Cycle `C_n` on vertices `0..n` in index order.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::TooSmall {
            family: "cycle",
            what: "order",
            min: 3,
            got: n,
        });
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    Graph::from_edge_list(n, &edges)
}

/// Star `K_{1,t}`: center is vertex 0, leaves are `1..=t`.
pub fn star_graph(t: usize) -> Result<Graph, GraphError> {
    if t < 1 {
        return Err(GraphError::TooSmall {
            family: "star",
            what: "leaf count",
            min: 1,
            got: t,
        });
    }
    let edges: Vec<_> = (1..=t).map(|i| (0, i)).collect();
    Graph::from_edge_list(t + 1, &edges)
}

/// Spider with `x` subdivided legs and `y` pendant legs: center is vertex 0,
/// leg `i < x` is `0 - (1+2i) - (2+2i)`, pendant leaves follow at
/// `2x+1 .. 2x+y`. Order is `2x + y + 1`.
pub fn spider_graph(x: usize, y: usize) -> Result<Graph, GraphError> {
    if x + y < 2 {
        return Err(GraphError::TooSmall {
            family: "spider",
            what: "x + y",
            min: 2,
            got: x + y,
        });
    }
    let mut edges = Vec::with_capacity(2 * x + y);
    for i in 0..x {
        let mid = 1 + 2 * i;
        edges.push((0, mid));
        edges.push((mid, mid + 1));
    }
    for j in 0..y {
        edges.push((0, 2 * x + 1 + j));
    }
    Graph::from_edge_list(2 * x + y + 1, &edges)
}

/// Double star `DS_{r,s}` (diameter 3): adjacent centers 0 and 1 carrying
/// `max(r,s)` and `min(r,s)` leaves. Requires `r, s >= 1`.
pub fn double_star_graph(r: usize, s: usize) -> Result<Graph, GraphError> {
    if r.min(s) < 1 {
        return Err(GraphError::TooSmall {
            family: "double star",
            what: "leaf count per center",
            min: 1,
            got: r.min(s),
        });
    }
    let (r, s) = (r.max(s), r.min(s));
    let mut edges = vec![(0, 1)];
    for i in 0..r {
        edges.push((0, 2 + i));
    }
    for j in 0..s {
        edges.push((1, 2 + r + j));
    }
    Graph::from_edge_list(r + s + 2, &edges)
}

/// `L_k`: k disjoint copies of `P_4` plus a spine path through the designated
/// center of each copy. Copy `i` is the path `4i - (4i+1) - (4i+2) - (4i+3)`
/// and its center is `4i+2` (the second interior vertex); the spine joins
/// consecutive centers. `L_1` is `P_4`.
pub fn l_k_graph(k: usize) -> Result<Graph, GraphError> {
    if k < 1 {
        return Err(GraphError::TooSmall {
            family: "l_k",
            what: "copy count",
            min: 1,
            got: k,
        });
    }
    let mut edges = Vec::with_capacity(4 * k - 1);
    for i in 0..k {
        let b = 4 * i;
        edges.push((b, b + 1));
        edges.push((b + 1, b + 2));
        edges.push((b + 2, b + 3));
        if i + 1 < k {
            edges.push((b + 2, b + 6));
        }
    }
    Graph::from_edge_list(4 * k, &edges)
}

/// Corona `H ∘ K_1`: one pendant leaf attached to every vertex of `H`.
/// Original vertices keep their labels; the leaf of `v` is `|V(H)| + v`.
pub fn corona(h: &Graph) -> Result<Graph, GraphError> {
    let n = h.n();
    let mut edges = h.edges();
    for v in 0..n {
        edges.push((v, n + v));
    }
    Graph::from_edge_list(2 * n, &edges)
}

/// Cartesian product `G □ H`: vertex `(g, h)` maps to index `g·|V(H)| + h`;
/// `(g,h) ~ (g',h')` iff the vertices agree in one coordinate and are
/// adjacent in the other.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    let size = g.n() * h.n();
    if size > PRODUCT_SIZE_CAP {
        return Err(GraphError::ProductTooLarge {
            size,
            cap: PRODUCT_SIZE_CAP,
        });
    }
    let idx = |a: Vertex, b: Vertex| a * h.n() + b;
    let mut edges = Vec::new();
    for a in 0..g.n() {
        for (b, c) in h.edges() {
            edges.push((idx(a, b), idx(a, c)));
        }
    }
    for (a, c) in g.edges() {
        for b in 0..h.n() {
            edges.push((idx(a, b), idx(c, b)));
        }
    }
    Graph::from_edge_list(size, &edges)
}
