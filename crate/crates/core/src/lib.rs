//! Exact homomorphism counting toolkit.
//!
//! The crate covers four layers, all pure and allocation-only (`no_std` + `alloc`):
//!
//! * [`graph`] and [`canon`]: simple source graphs, vertex-weighted target graphs
//!   with loops, designated bipartitions, canonical forms and isomorphism tests.
//! * [`constructions`]: named families (complete graphs, paths, cycles, stars, the
//!   hard-core and Widom-Rowlinson targets) and the transformations between them:
//!   the double cover with matching `G'`, the extended line graph, loop addition,
//!   tensor products, exponential graphs and looped parts.
//! * [`partition`]: exact values of `hom(G, H)`, the weighted partition function
//!   `Z(G, H)`, its bipartition-respecting variant `Z_b`, and exact comparisons of
//!   the normalized quantity `Z(G, H)^(1/|V(G)|)`.
//! * [`census`]: isomorph-free enumeration of `d`-regular graphs.
//!
//! File formats, the CLI and the verification harness live in the `homlab` crate.

#![no_std]

extern crate alloc;

mod bits;
pub mod canon;
pub mod census;
pub mod constructions;
pub mod graph;
pub mod partition;
pub mod rational;

pub use bits::BitMatrix;
pub use canon::{are_isomorphic, canonical_form, CanonicalForm, CANON_VERTEX_CAP};
pub use graph::{BipartiteTarget, GraphError, SimpleGraph, TargetGraph};
pub use rational::{ExactValue, Rational};
