//! Exact minimum dominating set via branch and bound.
//!
//! Branching picks an undominated vertex and tries every way to cover it;
//! the lower bound divides the undominated count by the best single-vertex
//! coverage, and a greedy dominating set seeds the incumbent.

use super::{
    all_vertices_mask, greedy_dominating_mask, require_bitsets, Invariant, Method, SolveError,
    SolveResult, Witness, DEFAULT_NODE_BUDGET,
};
use crate::graph::Graph;
use crate::labeling::VertexSet;

pub fn domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    domination_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn domination_number_with_budget(g: &Graph, budget: u64) -> Result<SolveResult, SolveError> {
    let adj = require_bitsets(g)?;
    let n = g.n();
    let closed: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(v, row)| row | 1 << v)
        .collect();
    let all = all_vertices_mask(n);

    let seed = greedy_dominating_mask(&closed, n);
    let mut search = DomSearch {
        closed: &closed,
        all,
        n,
        best_size: seed.count_ones(),
        best_set: seed,
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.dfs(0, 0, 0, 0);
    if search.exhausted {
        return Err(SolveError::BudgetExhausted(budget));
    }
    Ok(SolveResult::checked(
        g,
        Invariant::Gamma,
        search.best_size,
        Method::BranchBound,
        Witness::Vertices(VertexSet::from_mask(search.best_set)),
        search.nodes,
    ))
}

struct DomSearch<'a> {
    closed: &'a [u64],
    all: u64,
    n: usize,
    best_size: u32,
    best_set: u64,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl DomSearch<'_> {
    fn dfs(&mut self, chosen: u64, dominated: u64, size: u32, forbidden: u64) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if dominated == self.all {
            if size < self.best_size {
                self.best_size = size;
                self.best_set = chosen;
            }
            return;
        }
        let undominated = self.all & !dominated;
        let selectable = self.all & !forbidden & !chosen;

        // One future vertex covers at most max_cover undominated vertices.
        let mut max_cover = 0u32;
        for v in 0..self.n {
            if selectable >> v & 1 == 1 {
                max_cover = max_cover.max((self.closed[v] & undominated).count_ones());
            }
        }
        if max_cover == 0 {
            return;
        }
        let lower = undominated.count_ones().div_ceil(max_cover);
        if size + lower >= self.best_size {
            return;
        }

        // Branch on the undominated vertex with the fewest remaining covers.
        let mut branch_v = usize::MAX;
        let mut branch_opts = u32::MAX;
        for v in 0..self.n {
            if undominated >> v & 1 == 1 {
                let opts = (self.closed[v] & selectable).count_ones();
                if opts < branch_opts {
                    branch_opts = opts;
                    branch_v = v;
                }
            }
        }
        if branch_opts == 0 {
            return;
        }

        // Children partition solutions by the first candidate they contain,
        // so earlier candidates become forbidden for later siblings.
        let mut local_forbidden = forbidden;
        let candidates = self.closed[branch_v] & selectable;
        for v in 0..self.n {
            if candidates >> v & 1 == 1 {
                self.dfs(
                    chosen | 1 << v,
                    dominated | self.closed[v],
                    size + 1,
                    local_forbidden,
                );
                local_forbidden |= 1 << v;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::labeling::is_dominating;
    use crate::solver::brute_domination;

    #[test]
    fn small_exact_values() {
        assert_eq!(domination_number(&path_graph(4).unwrap()).unwrap().value, 2);

        let grid = cartesian_product(&path_graph(4).unwrap(), &path_graph(2).unwrap()).unwrap();
        assert_eq!(domination_number(&grid).unwrap().value, 3);
        assert_eq!(brute_domination(&grid).unwrap().value, 3);

        let c4k1 = corona(&cycle_graph(4).unwrap()).unwrap();
        assert_eq!(domination_number(&c4k1).unwrap().value, 4);
        assert_eq!(brute_domination(&c4k1).unwrap().value, 4);
    }

    #[test]
    fn witness_dominates() {
        let g = cycle_graph(7).unwrap();
        let res = domination_number(&g).unwrap();
        let s = res.vertex_witness().unwrap();
        assert!(is_dominating(&g, s));
        assert_eq!(s.len() as u32, res.value);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = cartesian_product(&path_graph(5).unwrap(), &path_graph(5).unwrap()).unwrap();
        assert_eq!(
            domination_number_with_budget(&g, 3),
            Err(SolveError::BudgetExhausted(3))
        );
    }

    #[test]
    fn matches_brute_on_small_graphs() {
        for n in 1..=7 {
            let p = path_graph(n).unwrap();
            assert_eq!(
                domination_number(&p).unwrap().value,
                brute_domination(&p).unwrap().value
            );
        }
        for n in 3..=8 {
            let c = cycle_graph(n).unwrap();
            assert_eq!(
                domination_number(&c).unwrap().value,
                brute_domination(&c).unwrap().value
            );
        }
    }
}
