//! Fortifying minimum spanning trees against a budget.
//!
//! Edge weights may be raised at a per-unit cost. The library computes the
//! exact continuous optimum (a greedy over minimum-strength cuts), rounds it
//! into integral schemes with approximation guarantees, solves the
//! uniform-weight case exactly, and ships brute-force oracles that
//! cross-check all of it on small instances.
//!
//! All arithmetic is exact: weights, budgets and slopes are [`Rational`].

pub mod approx;
pub mod error;
pub mod flows;
pub mod graph;
pub mod oracle;
pub mod partition;
pub mod raise;
pub mod rational;
pub mod strength;
pub mod uniform;

pub use error::{Error, Result};
pub use graph::{
    compact, components_increase, coverage, mst_weight, sm_eq, CompactedEdge, CompactedGraph, Edge,
    EdgeId, Perturbation, WeightedGraph,
};
pub use rational::Rational;
