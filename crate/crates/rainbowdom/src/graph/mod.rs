//! Immutable simple undirected graphs on dense 0-based vertex indices.
//!
//! Every family generator documents its canonical labeling so that witnesses
//! and certificates are reproducible across runs.

use std::collections::VecDeque;

use thiserror::Error;

pub mod families;
pub mod io;
pub mod profile;

pub use families::{
    cartesian_product, corona, cycle_graph, double_star_graph, l_k_graph, path_graph,
    spider_graph, star_graph,
};
pub use profile::{classify_spider, structural_profile, SpiderShape, StructuralProfile};

/// Vertices are indices `0..n`.
pub type Vertex = usize;

/// One machine word backs the solver-facing adjacency view.
pub const MAX_SOLVER_VERTICES: usize = 64;

/// Products larger than this are refused at construction time because no
/// solver downstream could touch them.
pub const PRODUCT_SIZE_CAP: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for {n} vertices")]
    EndpointOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{family} requires {what} >= {min}, got {got}")]
    TooSmall {
        family: &'static str,
        what: &'static str,
        min: usize,
        got: usize,
    },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("product would have {size} vertices, cap is {cap}")]
    ProductTooLarge { size: usize, cap: usize },
}

/// Immutable simple undirected graph: vertex count plus sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    had_duplicate_edges: bool,
}

impl Graph {
    /// Builds a normalized graph from an edge list. Self-loops and
    /// out-of-range endpoints are rejected; duplicate edges are collapsed
    /// and flagged via [`Graph::had_duplicate_edges`].
    pub fn from_edge_list(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for e in [u, v] {
                if e >= n {
                    return Err(GraphError::EndpointOutOfRange { vertex: e, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut had_duplicate_edges = false;
        for list in &mut adj {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                had_duplicate_edges = true;
            }
        }
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Graph {
            n,
            adj,
            edge_count,
            had_duplicate_edges,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// True when the constructing edge list contained a repeated edge.
    pub fn had_duplicate_edges(&self) -> bool {
        self.had_duplicate_edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.n
    }

    /// Edges as pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    /// A penultimate vertex is any neighbor of a degree-one vertex.
    pub fn is_penultimate(&self, v: Vertex) -> bool {
        self.adj[v].iter().any(|&u| self.is_leaf(u))
    }

    /// Open-neighborhood bitmasks, one word per vertex; `None` when the
    /// graph exceeds [`MAX_SOLVER_VERTICES`].
    pub fn adjacency_bitsets(&self) -> Option<Vec<u64>> {
        if self.n > MAX_SOLVER_VERTICES {
            return None;
        }
        let mut rows = vec![0u64; self.n];
        for u in 0..self.n {
            for &v in &self.adj[u] {
                rows[u] |= 1 << v;
            }
        }
        Some(rows)
    }

    /// Closed-neighborhood bitmasks `N[v]`.
    pub fn closed_bitsets(&self) -> Option<Vec<u64>> {
        let mut rows = self.adjacency_bitsets()?;
        for (u, row) in rows.iter_mut().enumerate() {
            *row |= 1 << u;
        }
        Some(rows)
    }

    /// BFS hop distances from `src`; unreachable vertices get `usize::MAX`.
    pub fn bfs_distances(&self, src: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_distances(0).iter().all(|&d| d != usize::MAX)
    }

    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut count = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            count += 1;
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        count
    }

    pub fn is_tree(&self) -> bool {
        self.edge_count == self.n - 1 && self.is_connected()
    }

    /// Subgraph induced on `keep` (deduplicated, sorted). Returns the graph
    /// together with the map from new indices back to old labels.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut old_of: Vec<Vertex> = keep.to_vec();
        old_of.sort_unstable();
        old_of.dedup();
        let mut new_of = vec![usize::MAX; self.n];
        for (new, &old) in old_of.iter().enumerate() {
            new_of[old] = new;
        }
        let mut edges = Vec::new();
        for &old in &old_of {
            for &w in &self.adj[old] {
                if old < w && new_of[w] != usize::MAX {
                    edges.push((new_of[old], new_of[w]));
                }
            }
        }
        let g = Graph::from_edge_list(old_of.len(), &edges).expect("induced subgraph is simple");
        (g, old_of)
    }

    /// Same graph with one edge removed; `None` if the edge is absent.
    pub fn without_edge(&self, u: Vertex, v: Vertex) -> Option<Graph> {
        if !self.has_edge(u, v) {
            return None;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Some(Graph::from_edge_list(self.n, &edges).expect("edge removal keeps the graph simple"))
    }

    /// Same graph with one edge added; `None` if already present or u == v.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Option<Graph> {
        if u == v || u >= self.n || v >= self.n || self.has_edge(u, v) {
            return None;
        }
        let mut edges = self.edges();
        edges.push((u.min(v), u.max(v)));
        Some(Graph::from_edge_list(self.n, &edges).expect("edge addition keeps the graph simple"))
    }
}

/// Exhaustive isomorphism test for small graphs: degree-sequence filter, then
/// backtracking over degree-compatible assignments. Intended for the n <= 10
/// round-trip checks, not as a general isomorphism facility.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n != b.n || a.edge_count != b.edge_count {
        return false;
    }
    let mut da: Vec<_> = (0..a.n).map(|v| a.degree(v)).collect();
    let mut db: Vec<_> = (0..b.n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    // Map high-degree vertices first to fail fast.
    let mut order: Vec<Vertex> = (0..a.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut image = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn extend(
        a: &Graph,
        b: &Graph,
        order: &[Vertex],
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        'cand: for w in 0..b.n() {
            if used[w] || a.degree(u) != b.degree(w) {
                continue;
            }
            for &prev in &order[..pos] {
                if a.has_edge(u, prev) != b.has_edge(w, image[prev]) {
                    continue 'cand;
                }
            }
            image[u] = w;
            used[w] = true;
            if extend(a, b, order, pos + 1, image, used) {
                return true;
            }
            image[u] = usize::MAX;
            used[w] = false;
        }
        false
    }
    extend(a, b, &order, 0, &mut image, &mut used)
}
