//! Hamiltonian bypasses in digraphs and balanced bipartite digraphs.
//!
//! A Hamiltonian bypass is a Hamiltonian path whose initial vertex dominates
//! its terminal vertex. This crate provides:
//!
//! * [`Digraph`] and [`BipartiteDigraph`], small bitset-backed digraphs (at most
//!   64 vertices) with degree arithmetic, strong and k-strong connectivity,
//!   converse, induced subdigraphs and brute-force isomorphism;
//! * exact backtracking [`solvers`] for Hamiltonian cycles, paths, bypasses,
//!   longest cycles through a vertex, cycles through a vertex set and spanning
//!   `D(n, q)` subdigraphs;
//! * executable insertion and merge procedures in [`lemmas`], including the
//!   bypass construction from a minimal chord of a Hamiltonian cycle in a
//!   bipartite digraph;
//! * degree-condition predicates with witnesses in [`conditions`];
//! * generators for the extremal [`families`];
//! * a statement registry and enumeration engine in [`harness`].

pub mod conditions;
pub mod digraph;
mod error;
pub mod families;
pub mod format;
pub mod harness;
pub mod lemmas;
pub mod solvers;

pub use digraph::{BipartiteDigraph, Degree, Digraph, VertexSet, Walk, WalkKind};
pub use error::{Error, Result};
pub use solvers::{Outcome, SolveBudget};
