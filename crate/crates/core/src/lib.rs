//! Constructions and verification tools for graphs that are unions of few
//! comparability graphs.
//!
//! The crate provides:
//!
//! - strict partial orders with transitive closure, validation, and
//!   chain-height (Mirsky) colorings ([`order`], [`coloring`]);
//! - the chain-grid construction whose union has no homogeneous set much
//!   larger than its cell size ([`grid`]);
//! - the expander-ranked construction whose union is sparse while its
//!   complement has no large balanced biclique ([`ranked`], [`expander`],
//!   [`separation`]);
//! - exact small-scale oracles (maximum clique, independent set, balanced
//!   biclique, maximal-clique enumeration) and seeded Monte-Carlo
//!   experiment drivers ([`analysis`]).
//!
//! Everything randomized is keyed by an explicit 64-bit seed and is
//! reproducible bit-for-bit.

mod bitset;

pub mod analysis;
pub mod coloring;
pub mod error;
pub mod expander;
pub mod graph;
pub mod grid;
pub mod order;
pub mod ranked;
pub mod rng;
pub mod separation;

pub use coloring::{
    extract_homogeneous, guaranteed_homogeneous_size, mirsky_coloring, product_coloring, Coloring,
    HomogeneousKind, HomogeneousSet,
};
pub use error::{Error, Result};
pub use expander::{
    check_expander_bound, closed_neighborhood, graph_power, random_regular, vertex_expansion,
    BoundCheck, CertificateMode, ExpansionCertificate, ExpansionMode, PowerGraph, RegularGraph,
};
pub use graph::{comparability_graph, union_graphs, LabeledUnionGraph, SimpleGraph};
pub use grid::{GridConstruction, GridParams};
pub use order::{check_partial_order, OrderReport, StrictOrder};
pub use ranked::{axis_le, axis_lt, axis_lt_disjoint, RankVariant, RankedConstruction, RankedParams};
pub use separation::{comparable_subsets, separate_halves, ComparableSubsets, Separation, Side};
