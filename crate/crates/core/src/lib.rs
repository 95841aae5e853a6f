//! Exact k-tuple domination on two circular-arc subclasses.
//!
//! A set `D` of vertices k-tuple dominates a graph when every closed
//! neighborhood contains at least `k` members of `D`. This crate solves the
//! minimum k-tuple domination problem exactly on:
//!
//! - **co-biconvex graphs** (augmented adjacency matrix with consecutive
//!   zeros per column) for `k` up to the universal-vertex count plus three,
//!   via PQ-tree recognition, universal-vertex peeling and the independence
//!   numbers of two auxiliary interval graphs;
//! - **web graphs** `W(n, m)` for every feasible `k`, in time linear in `n`,
//!   via a modular-arithmetic vertex partition with the closed form
//!   `⌈kn/(2m+1)⌉`.
//!
//! Brute-force oracles (subset enumeration, full permutation search) back
//! every fast path in the test suite.

pub mod cobiconvex;
pub mod domination;
pub mod fixtures;
pub mod gen;
pub mod graph;
pub mod matrix;
pub mod oracle;
pub mod pqtree;
pub mod recognition;
pub mod web;

pub use cobiconvex::{solve_cobiconvex, AlphaPair, IntervalModel, SolveError};
pub use domination::{Derivation, DominationResult, DominationValue};
pub use graph::{Graph, GraphError};
pub use matrix::ZeroOneMatrix;
pub use oracle::{oracle_min_ktuple, OracleBudget, OracleError};
pub use recognition::{
    c0p_columns, c1p_columns, circ1p_columns, decompose_cobiconvex, CoBiconvexDecomposition,
    DecomposeError,
};
pub use web::{algorithm1, class_sequence, web_graph, WebParams};
