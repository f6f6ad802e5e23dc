//! Evaluates every γ_r2 inequality on a concrete graph, in exact rational
//! arithmetic, and runs the Cartesian-product inequality checks.

use num_rational::Ratio;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{cartesian_product, structural_profile, Graph, GraphError};
use crate::solver::{
    domination_number_with_budget, rainbow_domination_number_with_budget,
    roman_domination_number_with_budget, tree_rainbow2, SolveError, DEFAULT_NODE_BUDGET,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("bound reports require a connected graph")]
    Disconnected,
    #[error("the tree lower bound requires a tree")]
    NotATree,
    #[error("bound requires at least {min} vertices, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

fn serialize_ratio<S: Serializer>(r: &Ratio<i64>, s: S) -> Result<S::Ok, S::Error> {
    if *r.denom() == 1 {
        s.serialize_str(&r.numer().to_string())
    } else {
        s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
    }
}

/// One inequality, stated as `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundEntry {
    pub name: &'static str,
    pub lhs: i64,
    #[serde(serialize_with = "serialize_ratio")]
    pub rhs: Ratio<i64>,
    pub holds: bool,
    pub tight: bool,
}

impl BoundEntry {
    pub fn new(name: &'static str, lhs: i64, rhs: Ratio<i64>) -> BoundEntry {
        let lhs_r = Ratio::from_integer(lhs);
        BoundEntry {
            name,
            lhs,
            rhs,
            holds: lhs_r <= rhs,
            tight: lhs_r == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactValues {
    pub gamma: Option<u32>,
    pub gamma_r2: Option<u32>,
    pub gamma_roman: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub n: usize,
}

/// Per-inequality verdicts for one connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub graph: GraphSummary,
    pub values: ExactValues,
    pub bounds: Vec<BoundEntry>,
    /// Names of inequalities skipped because a solver gave up.
    pub unknown: Vec<&'static str>,
}

impl BoundReport {
    pub fn any_violated(&self) -> bool {
        self.bounds.iter().any(|e| !e.holds)
    }
}

/// γ(T) + ceil((ℓ - p) / Δ): the tree lower bound on γ_r2.
pub fn tree_lower_bound(t: &Graph) -> Result<u32, BoundsError> {
    tree_lower_bound_with_budget(t, DEFAULT_NODE_BUDGET)
}

pub fn tree_lower_bound_with_budget(t: &Graph, budget: u64) -> Result<u32, BoundsError> {
    if !t.is_tree() {
        return Err(BoundsError::NotATree);
    }
    if t.n() < 3 {
        return Err(BoundsError::TooSmall {
            min: 3,
            got: t.n(),
        });
    }
    let prof = structural_profile(t);
    let gamma = domination_number_with_budget(t, budget)?.value;
    let excess = prof.leaf_count.saturating_sub(prof.penultimate_count);
    Ok(gamma + excess.div_ceil(prof.max_degree) as u32)
}

/// Computes γ, γ_r2, γ_R exactly and evaluates the sandwich chain, the
/// Hartnell-Rall bounds at k = 2, the 3n/4 bound, both diameter bounds and,
/// on trees, the tree lower bound. Budget-exhausted values leave their
/// inequalities marked unknown.
pub fn bound_report(g: &Graph) -> Result<BoundReport, BoundsError> {
    bound_report_with_budget(g, DEFAULT_NODE_BUDGET)
}

pub fn bound_report_with_budget(g: &Graph, budget: u64) -> Result<BoundReport, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::Disconnected);
    }
    let n = g.n() as i64;
    let prof = structural_profile(g);
    let diam = prof.diameter.expect("connected graph has a diameter") as i64;

    let gamma = optional(domination_number_with_budget(g, budget).map(|r| r.value))?;
    let gamma_r2 = if prof.is_tree {
        optional(tree_rainbow2(g).map(|r| r.value))?
    } else {
        optional(rainbow_domination_number_with_budget(g, 2, budget).map(|r| r.value))?
    };
    let gamma_roman = optional(roman_domination_number_with_budget(g, budget).map(|r| r.value))?;

    let mut bounds = Vec::new();
    let mut unknown = Vec::new();
    let mut push = |name, lhs: Option<i64>, rhs: Option<Ratio<i64>>| match (lhs, rhs) {
        (Some(lhs), Some(rhs)) => bounds.push(BoundEntry::new(name, lhs, rhs)),
        _ => unknown.push(name),
    };
    let int = |x: Option<u32>| x.map(|v| Ratio::from_integer(v as i64));
    let raw = |x: Option<u32>| x.map(|v| v as i64);

    push("gamma_le_gamma_r2", raw(gamma), int(gamma_r2));
    push("gamma_r2_le_gamma_roman", raw(gamma_r2), int(gamma_roman));
    push(
        "gamma_roman_le_two_gamma",
        raw(gamma_roman),
        gamma.map(|v| Ratio::from_integer(2 * v as i64)),
    );
    push(
        "hartnell_rall_lower",
        gamma.map(|v| n.min(v as i64)),
        int(gamma_r2),
    );
    push(
        "hartnell_rall_upper",
        raw(gamma_r2),
        gamma.map(|v| Ratio::from_integer(2 * v as i64)),
    );
    if n >= 3 {
        push("three_quarters", raw(gamma_r2), Some(Ratio::new(3 * n, 4)));
    }
    push(
        "diam_upper",
        raw(gamma_r2),
        Some(Ratio::from_integer(n - (diam - 1).div_euclid(2))),
    );
    push(
        "diam_lower",
        Some((2 * diam + 2).div_euclid(5) + i64::from((2 * diam + 2) % 5 != 0)),
        int(gamma_r2),
    );
    if prof.is_tree && g.n() >= 3 {
        let lower = match tree_lower_bound_with_budget(g, budget) {
            Ok(v) => Some(v as i64),
            Err(BoundsError::Solve(SolveError::BudgetExhausted(_))) => None,
            Err(e) => return Err(e),
        };
        push("tree_lower", lower, int(gamma_r2));
    }

    Ok(BoundReport {
        graph: GraphSummary { n: g.n() },
        values: ExactValues {
            gamma,
            gamma_r2,
            gamma_roman,
        },
        bounds,
        unknown,
    })
}

fn optional(r: Result<u32, SolveError>) -> Result<Option<u32>, BoundsError> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(SolveError::BudgetExhausted(_)) => Ok(None),
        Err(SolveError::SizeCap { .. }) => Ok(None),
        Err(e) => Err(BoundsError::Solve(e)),
    }
}

/// Exact values and verdicts for the three product inequalities against
/// γ(G)·γ(H). The rainbow verdict is data about an open problem; the Roman
/// and doubled-domination verdicts are theorems.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductReport {
    pub gamma_g: u32,
    pub gamma_h: u32,
    pub gamma_product: Option<u32>,
    pub gamma_r2_product: Option<u32>,
    pub gamma_roman_product: Option<u32>,
    /// γ_r2(G □ H) >= γ(G)γ(H)? A `false` here is a counterexample
    /// candidate for the open problem, surfaced rather than asserted.
    pub rainbow_ge_product: Option<bool>,
    /// γ_R(G □ H) >= γ(G)γ(H)?
    pub roman_ge_product: Option<bool>,
    /// 2γ(G □ H) >= γ(G)γ(H)?
    pub doubled_ge_product: Option<bool>,
}

pub fn product_check(g: &Graph, h: &Graph) -> Result<ProductReport, BoundsError> {
    product_check_with_budget(g, h, DEFAULT_NODE_BUDGET)
}

pub fn product_check_with_budget(
    g: &Graph,
    h: &Graph,
    budget: u64,
) -> Result<ProductReport, BoundsError> {
    let product = cartesian_product(g, h)?;
    let gamma_g = domination_number_with_budget(g, budget)?.value;
    let gamma_h = domination_number_with_budget(h, budget)?.value;
    let target = gamma_g * gamma_h;

    let gamma_product = optional(domination_number_with_budget(&product, budget).map(|r| r.value))?;
    let gamma_r2_product = if product.is_tree() {
        optional(tree_rainbow2(&product).map(|r| r.value))?
    } else {
        optional(rainbow_domination_number_with_budget(&product, 2, budget).map(|r| r.value))?
    };
    let gamma_roman_product =
        optional(roman_domination_number_with_budget(&product, budget).map(|r| r.value))?;

    Ok(ProductReport {
        gamma_g,
        gamma_h,
        gamma_product,
        gamma_r2_product,
        gamma_roman_product,
        rainbow_ge_product: gamma_r2_product.map(|v| v >= target),
        roman_ge_product: gamma_roman_product.map(|v| v >= target),
        doubled_ge_product: gamma_product.map(|v| 2 * v >= target),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn tree_lower_bound_examples() {
        assert_eq!(tree_lower_bound(&star_graph(4).unwrap()).unwrap(), 2);
        assert_eq!(tree_lower_bound(&double_star_graph(4, 4).unwrap()).unwrap(), 4);
        assert_eq!(tree_lower_bound(&path_graph(6).unwrap()).unwrap(), 2);
        assert_eq!(
            tree_lower_bound(&cycle_graph(4).unwrap()),
            Err(BoundsError::NotATree)
        );
        assert_eq!(
            tree_lower_bound(&path_graph(2).unwrap()),
            Err(BoundsError::TooSmall { min: 3, got: 2 })
        );
    }

    fn entry<'a>(report: &'a BoundReport, name: &str) -> &'a BoundEntry {
        report
            .bounds
            .iter()
            .find(|e| e.name == name)
            .unwrap_or_else(|| panic!("missing entry {name}"))
    }

    #[test]
    fn p3_diameter_lower_is_tight() {
        let report = bound_report(&path_graph(3).unwrap()).unwrap();
        let e = entry(&report, "diam_lower");
        assert_eq!(e.lhs, 2);
        assert!(e.holds && e.tight);
        assert_eq!(report.values.gamma_r2, Some(2));
    }

    #[test]
    fn p6_diameter_upper_is_tight() {
        let report = bound_report(&path_graph(6).unwrap()).unwrap();
        let e = entry(&report, "diam_upper");
        assert_eq!(e.rhs, Ratio::from_integer(4));
        assert!(e.holds && e.tight);
    }

    #[test]
    fn p7_chain_values() {
        let report = bound_report(&path_graph(7).unwrap()).unwrap();
        assert_eq!(report.values.gamma, Some(3));
        assert_eq!(report.values.gamma_r2, Some(4));
        assert_eq!(report.values.gamma_roman, Some(5));
        assert!(!report.any_violated());
        assert_eq!(entry(&report, "three_quarters").rhs, Ratio::new(21, 4));
    }

    #[test]
    fn disconnected_is_rejected() {
        let g = crate::graph::Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bound_report(&g), Err(BoundsError::Disconnected));
    }

    #[test]
    fn k1_and_k2_reports_hold() {
        for n in 1..=2 {
            let report = bound_report(&path_graph(n).unwrap()).unwrap();
            assert!(!report.any_violated(), "P{n} report: {report:?}");
            assert!(report.bounds.iter().all(|e| e.name != "three_quarters"));
        }
    }

    #[test]
    fn product_p2_p2() {
        let p2 = path_graph(2).unwrap();
        let report = product_check(&p2, &p2).unwrap();
        assert_eq!(report.gamma_g, 1);
        assert_eq!(report.gamma_h, 1);
        assert_eq!(report.gamma_r2_product, Some(2));
        assert_eq!(report.rainbow_ge_product, Some(true));
        assert_eq!(report.roman_ge_product, Some(true));
        assert_eq!(report.doubled_ge_product, Some(true));
    }

    #[test]
    fn product_star_p3() {
        let report = product_check(&star_graph(3).unwrap(), &path_graph(3).unwrap()).unwrap();
        assert_eq!(report.gamma_g * report.gamma_h, 1);
        assert_eq!(report.rainbow_ge_product, Some(true));
        assert_eq!(report.roman_ge_product, Some(true));
        assert_eq!(report.doubled_ge_product, Some(true));
    }

    #[test]
    fn product_p4_p4_meets_the_conjecture() {
        let p4 = path_graph(4).unwrap();
        let report = product_check(&p4, &p4).unwrap();
        assert_eq!(report.gamma_g * report.gamma_h, 4);
        assert!(report.gamma_r2_product.unwrap() >= 4);
    }
}
