//! Tools for the extremal problem of graphs in which no two vertices of equal
//! degree are joined by a path of a fixed length `ell`.
//!
//! The crate provides a dense small-graph type with graph6 I/O and canonical
//! labeling, an exact checker for forbidden equal-degree paths, the
//! complete-bipartite and half-graph lower-bound constructions, a constructive
//! path builder for dense vertex sets, exhaustive and isomorph-free searches
//! for the extremal edge count, and exact evaluators for the edge-count bounds
//! used in the upper-bound argument.

mod bits;
pub mod bounds;
pub mod canon;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod lemma;
pub mod paths;
pub mod sample;
pub mod search;

pub use bits::Bits;
pub use bounds::{BPartition, BoundReport, KnownKind, KnownValue, Rational};
pub use canon::{canonical_form, canonical_graph6, CanonicalForm, Canonizer, Labeling};
pub use constructions::{certificate, complete_bipartite, half_graph, Certificate, Construction};
pub use error::{Error, Result};
pub use graph::{Graph, Vertex, MAX_VERTICES};
pub use graph6::{from_graph6, to_graph6};
pub use lemma::{build_path, validate_instance, LemmaCase, LemmaInstance, LemmaPath, Validation};
pub use paths::{avoids, find_violation, path_of_length, verify_witness, PathWitness, Violation};
pub use search::{
    enumerate_nonisomorphic, p_canonical, p_labeled, Method, SearchOptions, SearchRecord,
};
