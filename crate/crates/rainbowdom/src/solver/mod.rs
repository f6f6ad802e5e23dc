//! Exact solvers for domination-type invariants: branch and bound for γ,
//! γ_rk and γ_R, a linear tree DP for γ_r2, plain enumeration oracles, and
//! the product-identity cross-check γ_r2(G) = γ(G □ K₂).

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, MAX_SOLVER_VERTICES};
use crate::labeling::{
    is_dominating, is_valid_krdf, is_valid_roman, RainbowAssignment, RomanAssignment, VertexSet,
};

mod brute;
mod domination;
mod rainbow;
mod roman;
mod tree_dp;

pub use brute::{brute_domination, brute_rainbow, brute_roman};
pub use domination::{domination_number, domination_number_with_budget};
pub use rainbow::{
    rainbow2_via_product, rainbow2_via_product_with_budget, rainbow_domination_number,
    rainbow_domination_number_with_budget,
};
pub use roman::{roman_domination_number, roman_domination_number_with_budget};
pub use tree_dp::tree_rainbow2;

/// Ceiling on explored search nodes before a solve gives up with
/// [`SolveError::BudgetExhausted`] instead of silently approximating.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("graph has {n} vertices, solver cap is {cap}")]
    SizeCap { n: usize, cap: usize },
    #[error("node budget of {0} exhausted before the search completed")]
    BudgetExhausted(u64),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("k = {0} is not supported (k must be 1, 2 or 3)")]
    UnsupportedK(u8),
}

/// Which quantity a [`SolveResult`] carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Gamma,
    GammaR1,
    GammaR2,
    GammaR3,
    GammaRoman,
}

impl Invariant {
    pub fn rainbow(k: u8) -> Invariant {
        match k {
            1 => Invariant::GammaR1,
            2 => Invariant::GammaR2,
            3 => Invariant::GammaR3,
            _ => unreachable!("k validated by the solver"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Brute,
    BranchBound,
    TreeDp,
    ViaProduct,
}

/// Optimality witness, in the shape matching the invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Rainbow(RainbowAssignment),
    Roman(RomanAssignment),
    Vertices(VertexSet),
}

/// Optimal value plus witness and search statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    pub invariant: Invariant,
    pub value: u32,
    pub method: Method,
    pub witness: Witness,
    #[serde(rename = "nodes")]
    pub nodes_explored: u64,
}

impl SolveResult {
    /// Every solver routes its output through here so an invalid or
    /// mis-weighted witness can never escape.
    fn checked(
        g: &Graph,
        invariant: Invariant,
        value: u32,
        method: Method,
        witness: Witness,
        nodes_explored: u64,
    ) -> SolveResult {
        let ok = match &witness {
            Witness::Rainbow(f) => {
                is_valid_krdf(g, f).expect("witness length matches") && f.weight() == value
            }
            Witness::Roman(r) => {
                is_valid_roman(g, r).expect("witness length matches") && r.weight() == value
            }
            Witness::Vertices(s) => is_dominating(g, *s) && s.len() as u32 == value,
        };
        assert!(
            ok,
            "solver bug: witness fails its validity predicate or weight for {invariant:?}"
        );
        SolveResult {
            invariant,
            value,
            method,
            witness,
            nodes_explored,
        }
    }

    pub fn rainbow_witness(&self) -> Option<&RainbowAssignment> {
        match &self.witness {
            Witness::Rainbow(f) => Some(f),
            _ => None,
        }
    }

    pub fn vertex_witness(&self) -> Option<VertexSet> {
        match &self.witness {
            Witness::Vertices(s) => Some(*s),
            _ => None,
        }
    }
}

fn require_bitsets(g: &Graph) -> Result<Vec<u64>, SolveError> {
    g.adjacency_bitsets().ok_or(SolveError::SizeCap {
        n: g.n(),
        cap: MAX_SOLVER_VERTICES,
    })
}

fn all_vertices_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Greedy dominating set: repeatedly take the vertex covering the most
/// still-undominated vertices (ties to the smaller index). Used as the
/// initial upper bound for the exact searches.
pub(crate) fn greedy_dominating_mask(closed: &[u64], n: usize) -> u64 {
    let all = all_vertices_mask(n);
    let mut chosen = 0u64;
    let mut dominated = 0u64;
    while dominated != all {
        let mut best_v = 0;
        let mut best_cover = 0;
        for v in 0..n {
            let cover = (closed[v] & !dominated).count_ones();
            if cover > best_cover {
                best_cover = cover;
                best_v = v;
            }
        }
        chosen |= 1 << best_v;
        dominated |= closed[best_v];
    }
    chosen
}
