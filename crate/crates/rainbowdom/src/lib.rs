//! rainbowdom: exact computation and verification for 2-rainbow domination.
//!
//! A 2-rainbow dominating function assigns each vertex a subset of {1,2} so
//! that every vertex with the empty set sees both colors across its
//! neighbors; γ_r2 is the minimum total number of assigned colors. This
//! crate provides:
//!
//! - graph families and structural metrics ([`graph`]),
//! - assignment types with validity predicates ([`labeling`]),
//! - exact solvers for γ, γ_rk and γ_R with optimality witnesses,
//!   including a linear-time tree DP and the γ(G □ K₂) oracle ([`solver`]),
//! - constructive assignments with run-time-certified weight bounds
//!   ([`construct`]),
//! - recognition of graphs attaining γ_r2 = 3n/4 with P4-partition
//!   certificates ([`extremal`]),
//! - per-graph inequality reports and Cartesian-product conjecture checks
//!   ([`bounds`]),
//! - instance generators ([`enumerate`]) and the scan/report CLI ([`cli`]).

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod enumerate;
pub mod extremal;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use graph::{Graph, GraphError};
pub use labeling::{ColorSet, RainbowAssignment, RomanAssignment, VertexSet};
pub use solver::{Invariant, Method, SolveError, SolveResult, Witness};
