//! Unit-cube intersection representations of interval graphs.
//!
//! Every interval graph `G` with claw number `ψ ≥ 2` is realized here as the
//! intersection of `⌈log₂ψ⌉ + 2` indifference graphs, i.e. by axis-parallel
//! cubes in that many dimensions, and by `⌈log₂α⌉` dimensions through a
//! universal-vertex augmentation. The crate also ships the independent
//! checkers and small-graph brute-force oracles used to validate those
//! constructions.
//!
//! All arithmetic is exact ([`rational::Rational`]). The crate is `no_std`
//! and only needs `alloc`.

#![no_std]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

pub mod construct;
pub mod graph;
pub mod interval;
pub mod labelling;
pub mod oracle;
pub mod params;
pub mod rational;
pub mod report;
pub mod verify;

pub use construct::{
    build_alpha_representation, build_best, build_degenerate, build_representation, normalize_unit, ConstructError,
    Construction, ConstructionTrace, CubeRepresentation, Variant,
};
pub use graph::{induced_subgraph, non_edges, parse_graph, Graph, GraphError, VertexSet};
pub use interval::{
    model_to_clique_ordering, model_to_graph, recognize_and_order, validate_ordering, CliqueOrdering, Interval,
    IntervalModel, NotInterval,
};
pub use labelling::{check_observations, label_vertices, Labelling};
pub use params::{ceil_log2, claw_number, independence_number, neighborhood_mis, ParamReport};
pub use rational::Rational;
pub use report::ValidationReport;
pub use verify::{check_trace, complete_dimensions, verify_representation, VerificationReport};
