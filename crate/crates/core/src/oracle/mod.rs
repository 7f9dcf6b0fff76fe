//! Brute-force oracles, the decomposition validator, reduction gadgets and
//! the cycle-structure check for optimal integral schemes.
//!
//! The oracles share no solver code with the algorithms they check: MST
//! weights come from an integer Kruskal, coverage from spanning-tree
//! enumeration, and schemes from exhaustive search.

mod brute;
mod corpus;
mod decomposition;
mod flows;
mod generators;
mod structure;

pub use brute::{
    brute_budgeted, brute_coverage, brute_min_kcut, brute_strength, brute_targeted, BruteSolution,
    SpanningTrees,
};
pub use corpus::{connected_graphs, digraphs};
pub use decomposition::{
    decompose_and_verify, decompose_global_offset, DecompositionTrace, LiftSegment, Phase,
};
pub use flows::{brute_mmf, brute_msp, BruteUpgrade};
pub use generators::{gen_kcut_gadget, gen_mmstu_instance, BaseGraph};
pub use structure::{optimality_structure_check, StructureReport, StructureViolation};
