//! Branch and bound for the k-rainbow domination number (k in {1,2,3}), and
//! the independent oracle route through γ(G □ K₂).

use super::{
    greedy_dominating_mask, require_bitsets, Invariant, Method, SolveError, SolveResult, Witness,
    DEFAULT_NODE_BUDGET,
};
use crate::construct;
use crate::graph::{cartesian_product, path_graph, Graph};
use crate::labeling::{ColorSet, RainbowAssignment};

pub fn rainbow_domination_number(g: &Graph, k: u8) -> Result<SolveResult, SolveError> {
    rainbow_domination_number_with_budget(g, k, DEFAULT_NODE_BUDGET)
}

/// Exact γ_rk by depth-first search over per-vertex color sets in a fixed
/// vertex order (descending degree, ties by index). Prunes on dead vertices
/// (an uncolored vertex whose neighborhood is fully decided and misses a
/// color), on partial weight plus a disjoint-neighborhood packing bound, and
/// is seeded with the best construction-module upper bound.
pub fn rainbow_domination_number_with_budget(
    g: &Graph,
    k: u8,
    budget: u64,
) -> Result<SolveResult, SolveError> {
    if !(1..=3).contains(&k) {
        return Err(SolveError::UnsupportedK(k));
    }
    let nb_mask = require_bitsets(g)?;
    let n = g.n();
    let full: u8 = (1 << k) - 1;

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    // Color-set options in increasing weight, then numeric value.
    let mut options: Vec<u8> = (0..=full).collect();
    options.sort_by_key(|c| (c.count_ones(), *c));

    let seed = initial_upper_bound(g, k);
    let seed_colors: Vec<u8> = seed.color_sets().iter().map(|cs| cs.bits()).collect();

    let mut search = RainbowSearch {
        g,
        nb_mask: &nb_mask,
        order: &order,
        options: &options,
        k,
        full,
        decided: vec![false; n],
        color: vec![0; n],
        seen_count: vec![[0u8; 3]; n],
        undecided_nb: (0..n).map(|v| g.degree(v) as u32).collect(),
        undecided_mask: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        pending_mask: 0,
        weight: 0,
        best: seed.weight(),
        best_colors: seed_colors,
        nodes: 0,
        budget,
        exhausted: false,
    };
    search.dfs(0, k == 2);
    if search.exhausted {
        return Err(SolveError::BudgetExhausted(budget));
    }
    let best = search.best;
    let nodes = search.nodes;
    let colors = search
        .best_colors
        .iter()
        .map(|&b| ColorSet::from_bits(b))
        .collect();
    let witness = RainbowAssignment::new(k, colors).expect("search colors stay within 1..=k");
    Ok(SolveResult::checked(
        g,
        Invariant::rainbow(k),
        best,
        Method::BranchBound,
        Witness::Rainbow(witness),
        nodes,
    ))
}

/// Cheapest known valid assignment before the search starts: all-{1},
/// full color sets on a greedy dominating set, and for k = 2 the diametral
/// and tree constructions where applicable.
fn initial_upper_bound(g: &Graph, k: u8) -> RainbowAssignment {
    let n = g.n();
    let mut best = RainbowAssignment::new(k, vec![ColorSet::single(1); n]).expect("k >= 1");

    if let Some(adj) = g.adjacency_bitsets() {
        let closed: Vec<u64> = adj
            .iter()
            .enumerate()
            .map(|(v, row)| row | 1 << v)
            .collect();
        let greedy = greedy_dominating_mask(&closed, n);
        if k as u32 * greedy.count_ones() < best.weight() {
            let colors = (0..n)
                .map(|v| {
                    if greedy >> v & 1 == 1 {
                        ColorSet::full(k)
                    } else {
                        ColorSet::EMPTY
                    }
                })
                .collect();
            best = RainbowAssignment::new(k, colors).expect("full sets are in range");
        }
    }
    if k == 2 {
        for candidate in [
            construct::diametral_rdf(g).ok(),
            construct::tree_rdf_three_quarters(g).ok(),
        ]
        .into_iter()
        .flatten()
        {
            if candidate.assignment.weight() < best.weight() {
                best = candidate.assignment;
            }
        }
    }
    best
}

struct RainbowSearch<'a> {
    g: &'a Graph,
    nb_mask: &'a [u64],
    order: &'a [usize],
    options: &'a [u8],
    k: u8,
    full: u8,
    decided: Vec<bool>,
    color: Vec<u8>,
    seen_count: Vec<[u8; 3]>,
    undecided_nb: Vec<u32>,
    undecided_mask: u64,
    /// Decided, uncolored vertices still missing a color.
    pending_mask: u64,
    weight: u32,
    best: u32,
    best_colors: Vec<u8>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl RainbowSearch<'_> {
    fn seen_bits(&self, v: usize) -> u8 {
        let mut bits = 0u8;
        for c in 0..self.k as usize {
            if self.seen_count[v][c] > 0 {
                bits |= 1 << c;
            }
        }
        bits
    }

    /// Applies `color[v] = c`; returns false when some vertex provably can
    /// no longer see all colors.
    fn decide(&mut self, v: usize, c: u8) -> bool {
        self.decided[v] = true;
        self.color[v] = c;
        self.weight += c.count_ones();
        self.undecided_mask &= !(1 << v);
        let mut alive = true;
        let g = self.g;
        for &u in g.neighbors(v) {
            self.undecided_nb[u] -= 1;
            if c != 0 {
                for cb in 0..self.k as usize {
                    if c >> cb & 1 == 1 {
                        self.seen_count[u][cb] += 1;
                    }
                }
            }
            if self.decided[u] && self.color[u] == 0 {
                if self.seen_bits(u) == self.full {
                    self.pending_mask &= !(1 << u);
                } else if self.undecided_nb[u] == 0 {
                    alive = false;
                }
            }
        }
        if c == 0 {
            if self.seen_bits(v) != self.full {
                if self.undecided_nb[v] == 0 {
                    alive = false;
                } else {
                    self.pending_mask |= 1 << v;
                }
            }
        }
        alive
    }

    fn undo(&mut self, v: usize, c: u8) {
        self.decided[v] = false;
        self.weight -= c.count_ones();
        self.undecided_mask |= 1 << v;
        self.pending_mask &= !(1 << v);
        let g = self.g;
        for &u in g.neighbors(v) {
            self.undecided_nb[u] += 1;
            if c != 0 {
                for cb in 0..self.k as usize {
                    if c >> cb & 1 == 1 {
                        self.seen_count[u][cb] -= 1;
                    }
                }
            }
            if self.decided[u] && self.color[u] == 0 {
                if self.seen_bits(u) == self.full {
                    self.pending_mask &= !(1 << u);
                } else {
                    self.pending_mask |= 1 << u;
                }
            }
        }
    }

    /// Packing bound: pending vertices with pairwise disjoint undecided
    /// neighborhoods each still cost their missing-color count.
    fn lower_bound(&self) -> u32 {
        let mut used = 0u64;
        let mut lb = 0u32;
        let mut rest = self.pending_mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let avail = self.nb_mask[v] & self.undecided_mask;
            if avail & used != 0 {
                continue;
            }
            used |= avail;
            lb += (self.full & !self.seen_bits(v)).count_ones();
        }
        lb
    }

    fn dfs(&mut self, i: usize, swap_free: bool) {
        if self.exhausted {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if i == self.order.len() {
            debug_assert_eq!(self.pending_mask, 0);
            if self.weight < self.best {
                self.best = self.weight;
                self.best_colors = self.color.clone();
            }
            return;
        }
        if self.weight + self.lower_bound() >= self.best {
            return;
        }
        let v = self.order[i];
        for idx in 0..self.options.len() {
            let c = self.options[idx];
            // Colors 1 and 2 are interchangeable until the first singleton
            // is placed, so {2} never needs to lead.
            if swap_free && self.k == 2 && c == 0b10 {
                continue;
            }
            if self.weight + c.count_ones() >= self.best {
                continue;
            }
            let alive = self.decide(v, c);
            if alive {
                self.dfs(i + 1, swap_free && (c == 0 || c == self.full));
            }
            self.undo(v, c);
        }
    }
}

pub fn rainbow2_via_product(g: &Graph) -> Result<SolveResult, SolveError> {
    rainbow2_via_product_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// Computes γ(G □ K₂) and translates the minimum dominating set back into a
/// 2-rainbow assignment (color i on v iff layer-i copy of v is in the set).
/// Callers use this as an independent oracle for γ_r2.
pub fn rainbow2_via_product_with_budget(g: &Graph, budget: u64) -> Result<SolveResult, SolveError> {
    if 2 * g.n() > crate::graph::MAX_SOLVER_VERTICES {
        return Err(SolveError::SizeCap {
            n: g.n(),
            cap: crate::graph::MAX_SOLVER_VERTICES / 2,
        });
    }
    let k2 = path_graph(2).expect("P2 exists");
    let prod = cartesian_product(g, &k2).expect("2n is within the product cap");
    let dom = super::domination_number_with_budget(&prod, budget)?;
    let set = dom.vertex_witness().expect("domination returns a set");
    let colors = (0..g.n())
        .map(|v| {
            let mut cs = ColorSet::EMPTY;
            for layer in 0..2u8 {
                if set.contains(2 * v + layer as usize) {
                    cs = cs.union(ColorSet::single(layer + 1));
                }
            }
            cs
        })
        .collect();
    let witness = RainbowAssignment::new(2, colors).expect("colors within 1..=2");
    Ok(SolveResult::checked(
        g,
        Invariant::GammaR2,
        dom.value,
        Method::ViaProduct,
        Witness::Rainbow(witness),
        dom.nodes_explored,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;
    use crate::labeling::is_valid_krdf;
    use crate::solver::{brute_rainbow, domination_number};

    #[test]
    fn path_and_cycle_values() {
        assert_eq!(
            rainbow_domination_number(&path_graph(4).unwrap(), 2)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            rainbow_domination_number(&cycle_graph(4).unwrap(), 2)
                .unwrap()
                .value,
            2
        );
        assert_eq!(
            rainbow_domination_number(&cycle_graph(5).unwrap(), 2)
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            brute_rainbow(&cycle_graph(5).unwrap(), 2).unwrap().value,
            3
        );
    }

    #[test]
    fn one_rainbow_is_domination() {
        for g in [
            path_graph(7).unwrap(),
            cycle_graph(6).unwrap(),
            star_graph(5).unwrap(),
            double_star_graph(3, 2).unwrap(),
        ] {
            assert_eq!(
                rainbow_domination_number(&g, 1).unwrap().value,
                domination_number(&g).unwrap().value
            );
        }
    }

    #[test]
    fn witness_is_valid_and_optimal_weight() {
        let g = spider_graph(3, 2).unwrap();
        let res = rainbow_domination_number(&g, 2).unwrap();
        let f = res.rainbow_witness().unwrap();
        assert!(is_valid_krdf(&g, f).unwrap());
        assert_eq!(f.weight(), res.value);
    }

    #[test]
    fn k_must_be_small() {
        let g = path_graph(3).unwrap();
        assert_eq!(
            rainbow_domination_number(&g, 4),
            Err(SolveError::UnsupportedK(4))
        );
        assert_eq!(
            rainbow_domination_number(&g, 0),
            Err(SolveError::UnsupportedK(0))
        );
    }

    #[test]
    fn k3_small_agreement_with_brute() {
        for g in [path_graph(5).unwrap(), cycle_graph(6).unwrap()] {
            assert_eq!(
                rainbow_domination_number(&g, 3).unwrap().value,
                brute_rainbow(&g, 3).unwrap().value
            );
        }
    }

    #[test]
    fn via_product_small_cases() {
        assert_eq!(
            rainbow2_via_product(&path_graph(4).unwrap()).unwrap().value,
            3
        );
        assert_eq!(
            rainbow2_via_product(&cycle_graph(4).unwrap())
                .unwrap()
                .value,
            2
        );
        assert_eq!(
            rainbow2_via_product(&path_graph(1).unwrap()).unwrap().value,
            1
        );
        // The translated witness must be a valid 2RDF of the base graph.
        let g = double_star_graph(3, 3).unwrap();
        let res = rainbow2_via_product(&g).unwrap();
        assert!(is_valid_krdf(&g, res.rainbow_witness().unwrap()).unwrap());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = cartesian_product(&cycle_graph(5).unwrap(), &cycle_graph(5).unwrap()).unwrap();
        assert_eq!(
            rainbow_domination_number_with_budget(&g, 2, 10),
            Err(SolveError::BudgetExhausted(10))
        );
    }
}
