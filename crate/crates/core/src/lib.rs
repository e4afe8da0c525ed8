//! Degree-constrained factors and orientations of multigraphs.
//!
//! The crate pairs constructive algorithms (tree packings, Eulerian splits,
//! flow- and matching-based factor finders, pipelines that build
//! `{g, f}`-factors in highly connected graphs) with brute-force oracles
//! that every construction is cross-checked against on small inputs.

pub mod connectivity;
pub mod decompositions;
pub mod factors;
mod flow;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod orientations;
pub mod pipeline;
pub mod search;
