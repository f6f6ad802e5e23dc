//! Plain enumeration oracles. These deliberately share nothing with the
//! branch-and-bound machinery: every candidate assignment is generated and
//! checked against the bare definition, so they anchor the oracle-agreement
//! tests.

use super::{Invariant, Method, SolveError, SolveResult, Witness};
use crate::graph::Graph;
use crate::labeling::{ColorSet, RainbowAssignment, RomanAssignment, VertexSet};

/// Caps keep full enumeration under a few hundred million elementary steps.
const RAINBOW_CODE_BITS: u32 = 26;
const DOMINATION_MAX_N: usize = 24;
const ROMAN_MAX_N: usize = 14;

/// Minimum kRDF weight by scanning all `(2^k)^n` assignments.
pub fn brute_rainbow(g: &Graph, k: u8) -> Result<SolveResult, SolveError> {
    if !(1..=3).contains(&k) {
        return Err(SolveError::UnsupportedK(k));
    }
    let n = g.n();
    let code_bits = k as u32 * n as u32;
    if code_bits > RAINBOW_CODE_BITS {
        return Err(SolveError::SizeCap {
            n,
            cap: (RAINBOW_CODE_BITS / k as u32) as usize,
        });
    }
    let mask = (1u64 << k) - 1;
    let full = mask;
    let mut best_weight = u32::MAX;
    let mut best_code = 0u64;
    let mut checked = 0u64;
    'codes: for code in 0..1u64 << code_bits {
        checked += 1;
        let weight = code.count_ones();
        if weight >= best_weight {
            continue;
        }
        for v in 0..n {
            if code >> (k as usize * v) & mask != 0 {
                continue;
            }
            let mut seen = 0u64;
            for &u in g.neighbors(v) {
                seen |= code >> (k as usize * u) & mask;
            }
            if seen != full {
                continue 'codes;
            }
        }
        best_weight = weight;
        best_code = code;
    }
    let colors = (0..n)
        .map(|v| ColorSet::from_bits((best_code >> (k as usize * v) & mask) as u8))
        .collect();
    let witness = RainbowAssignment::new(k, colors).expect("codes stay within k bits");
    Ok(SolveResult::checked(
        g,
        Invariant::rainbow(k),
        best_weight,
        Method::Brute,
        Witness::Rainbow(witness),
        checked,
    ))
}

/// Minimum dominating set by scanning all vertex subsets.
pub fn brute_domination(g: &Graph) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > DOMINATION_MAX_N {
        return Err(SolveError::SizeCap {
            n,
            cap: DOMINATION_MAX_N,
        });
    }
    let closed: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(1u64 << v, |acc, &u| acc | 1 << u)
        })
        .collect();
    let all = (1u64 << n) - 1;
    let mut best_size = u32::MAX;
    let mut best_set = 0u64;
    let mut checked = 0u64;
    for set in 0..1u64 << n {
        checked += 1;
        if set.count_ones() >= best_size {
            continue;
        }
        let mut covered = 0u64;
        let mut rest = set;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            covered |= closed[v];
        }
        if covered == all {
            best_size = set.count_ones();
            best_set = set;
        }
    }
    Ok(SolveResult::checked(
        g,
        Invariant::Gamma,
        best_size,
        Method::Brute,
        Witness::Vertices(VertexSet::from_mask(best_set)),
        checked,
    ))
}

/// Minimum Roman weight by scanning all `3^n` value vectors.
pub fn brute_roman(g: &Graph) -> Result<SolveResult, SolveError> {
    let n = g.n();
    if n > ROMAN_MAX_N {
        return Err(SolveError::SizeCap { n, cap: ROMAN_MAX_N });
    }
    let total = 3u64.pow(n as u32);
    let mut values = vec![0u8; n];
    let mut best_weight = u32::MAX;
    let mut best_values = values.clone();
    let mut checked = 0u64;
    for code in 0..total {
        checked += 1;
        let mut c = code;
        let mut weight = 0u32;
        for slot in values.iter_mut() {
            *slot = (c % 3) as u8;
            weight += *slot as u32;
            c /= 3;
        }
        if weight >= best_weight {
            continue;
        }
        let valid = (0..n).all(|v| {
            values[v] != 0 || g.neighbors(v).iter().any(|&u| values[u] == 2)
        });
        if valid {
            best_weight = weight;
            best_values = values.clone();
        }
    }
    let witness = RomanAssignment::new(best_values).expect("digits are 0..=2");
    Ok(SolveResult::checked(
        g,
        Invariant::GammaRoman,
        best_weight,
        Method::Brute,
        Witness::Roman(witness),
        checked,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn known_small_values() {
        assert_eq!(brute_rainbow(&path_graph(3).unwrap(), 2).unwrap().value, 2);
        assert_eq!(brute_rainbow(&path_graph(5).unwrap(), 2).unwrap().value, 3);
        assert_eq!(brute_rainbow(&cycle_graph(8).unwrap(), 2).unwrap().value, 4);
        assert_eq!(brute_domination(&path_graph(6).unwrap()).unwrap().value, 2);
        assert_eq!(brute_roman(&star_graph(4).unwrap()).unwrap().value, 2);
    }

    #[test]
    fn caps_are_enforced() {
        assert!(matches!(
            brute_rainbow(&path_graph(14).unwrap(), 2),
            Err(SolveError::SizeCap { .. })
        ));
        assert!(matches!(
            brute_domination(&path_graph(25).unwrap()),
            Err(SolveError::SizeCap { .. })
        ));
        assert!(matches!(
            brute_roman(&path_graph(15).unwrap()),
            Err(SolveError::SizeCap { .. })
        ));
    }
}
