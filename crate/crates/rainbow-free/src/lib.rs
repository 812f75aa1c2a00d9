//! Exact tooling for rainbow-triangle-free triples of graphs.
//!
//! Three graphs `G1, G2, G3` on a shared `n`-vertex set are encoded as one
//! pair-coloring: each vertex pair carries the subset of `{1,2,3}` naming the
//! graphs it belongs to. A *rainbow triangle* is a triangle using one edge
//! from each graph. This crate computes everything finite about maximizing
//! the product `e(G1) e(G2) e(G3)` under rainbow-freeness:
//!
//! - [`coloring`] — the exact data model: counting, rainbow detection,
//!   canonical forms, and two file formats.
//! - [`constructions`] — the named extremal configurations, including the
//!   two-part clique construction that beats `floor(n^2/4)^3` from `n = 15`
//!   on.
//! - [`objective`] — the constant `gamma ~ 0.0195967` (maximum of the
//!   construction's density polynomial), exact integer sweeps, and the
//!   crossover search.
//! - [`search`] — certified branch-and-bound over all rainbow-free colorings
//!   of small vertex counts, with symmetry breaking and parallel workers.
//! - [`analysis`] — structural checkers: the multi-colored clique
//!   decomposition, the three-colored matching property, counting
//!   diagnostics, and exact binomial-inequality sweeps.
//!
//! The `rainbow` binary exposes all of it behind subcommands (`gamma`,
//! `construct`, `search`, `check`, `sweep`, `inequalities`); the `examples/`
//! directory has one runnable walkthrough per capability.
//!
//! ```
//! use rainbow_free::constructions::theorem1_construction;
//!
//! let c = theorem1_construction(10, 8).unwrap();
//! assert!(c.has_rainbow_triangle().is_none());
//! assert_eq!(c.edge_counts().product().unwrap(), 13_804);
//! ```

pub mod analysis;
pub mod coloring;
pub mod constructions;
pub mod manifest;
pub mod objective;
pub mod search;

pub use coloring::{Color, ColorSet, Coloring, EdgeCounts, RainbowWitness};
pub use constructions::{
    frankl_bipartite, theorem1_construction, two_clique_family, TwoCliqueParams,
};
pub use objective::{discrete_best, eval_objective, maximize_objective};
pub use search::{search_exact, SearchConfig, SearchResult};
