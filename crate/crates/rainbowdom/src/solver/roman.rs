//! Exact Roman domination number.
//!
//! Optimal Roman functions can be normalized so the 1-vertices are exactly
//! those outside N[S] for S the set of 2-vertices, so the search branches on
//! S alone and scores `2|S| + |V - N[S]|`.

use super::{require_bitsets, Invariant, Method, SolveError, SolveResult, Witness,
    DEFAULT_NODE_BUDGET};
use crate::graph::Graph;
use crate::labeling::RomanAssignment;

/// Build-time cap for the Roman search; large enough for 5x5 products.
pub const ROMAN_VERTEX_CAP: usize = 32;

pub fn roman_domination_number(g: &Graph) -> Result<SolveResult, SolveError> {
    roman_domination_number_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn roman_domination_number_with_budget(
    g: &Graph,
    budget: u64,
) -> Result<SolveResult, SolveError> {
    if g.n() > ROMAN_VERTEX_CAP {
        return Err(SolveError::SizeCap {
            n: g.n(),
            cap: ROMAN_VERTEX_CAP,
        });
    }
    let adj = require_bitsets(g)?;
    let n = g.n();
    let closed: Vec<u64> = adj
        .iter()
        .enumerate()
        .map(|(v, row)| row | 1 << v)
        .collect();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    // suffix_undecided[p] = vertices at positions >= p.
    let mut suffix_undecided = vec![0u64; n + 1];
    for p in (0..n).rev() {
        suffix_undecided[p] = suffix_undecided[p + 1] | 1 << order[p];
    }

    let mut search = RomanSearch {
        closed: &closed,
        order: &order,
        suffix_undecided: &suffix_undecided,
        all,
        best: u32::MAX,
        best_set: 0,
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.dfs(0, 0, 0, 0);
    if search.exhausted {
        return Err(SolveError::BudgetExhausted(budget));
    }

    let two_set = search.best_set;
    let mut covered = 0u64;
    for v in 0..n {
        if two_set >> v & 1 == 1 {
            covered |= closed[v];
        }
    }
    let values = (0..n)
        .map(|v| {
            if two_set >> v & 1 == 1 {
                2
            } else if covered >> v & 1 == 0 {
                1
            } else {
                0
            }
        })
        .collect();
    let witness = RomanAssignment::new(values).expect("values are 0..=2");
    Ok(SolveResult::checked(
        g,
        Invariant::GammaRoman,
        search.best,
        Method::BranchBound,
        Witness::Roman(witness),
        search.nodes,
    ))
}

struct RomanSearch<'a> {
    closed: &'a [u64],
    order: &'a [usize],
    suffix_undecided: &'a [u64],
    all: u64,
    best: u32,
    best_set: u64,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl RomanSearch<'_> {
    fn dfs(&mut self, start_pos: usize, two_set: u64, covered: u64, cost2: u32) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        let uncovered = self.all & !covered;

        // Closing out here (no further 2s) is always a valid completion.
        let cost_here = cost2 + uncovered.count_ones();
        if cost_here < self.best {
            self.best = cost_here;
            self.best_set = two_set;
        }

        let undecided = self.suffix_undecided[start_pos];
        // Vertices no future 2 can reach stay at value 1 for good.
        let mut forced = 0u64;
        let mut rest = uncovered;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.closed[v] & undecided == 0 {
                forced |= 1 << v;
            }
        }
        let open = uncovered & !forced;
        let m = open.count_ones();
        let mut max_cover = 0u32;
        let mut w_rest = undecided;
        while w_rest != 0 {
            let w = w_rest.trailing_zeros() as usize;
            w_rest &= w_rest - 1;
            max_cover = max_cover.max((self.closed[w] & open).count_ones());
        }
        let lb_open = if m == 0 {
            0
        } else if max_cover <= 2 {
            m
        } else {
            (2 * m).div_ceil(max_cover)
        };
        if cost2 + forced.count_ones() + lb_open >= self.best {
            return;
        }

        for pos in start_pos..self.order.len() {
            let w = self.order[pos];
            if self.closed[w] & uncovered == 0 {
                continue;
            }
            self.dfs(pos + 1, two_set | 1 << w, covered | self.closed[w], cost2 + 2);
        }
    }
}
