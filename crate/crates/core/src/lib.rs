//! Corona join (`G1 ⊕ G2`) and subdivision-vertex join (`G1 ∔ G2`) graph products, exact
//! degree-based topological indices, and closed-form index formulas for both products checked
//! against direct computation.
//!
//! Index arithmetic is generic over [`ExactInt`]; the aliases below fix the default
//! arbitrary-precision scalar used by the harness and CLI.

pub mod closed_forms;
pub mod graph;
pub mod harness;
pub mod indices;
pub mod products;
pub mod rng;
pub mod scalar;

pub use closed_forms::{evaluate, path_cycle_example, ClosedFormError, Variant};
pub use graph::{DegreeSequence, Graph, GraphError, ParseError};
pub use indices::{graph_params, index, GraphParams, IndexError, IndexKind};
pub use products::{ProductGraph, ProductKind, ProvenanceTag, VertexProvenance};
pub use scalar::{Checked, ExactInt, Overflow};

pub use num_bigint::BigInt;

/// Arbitrary-precision index value; never overflows.
pub type IndexValue = BigInt;
/// 128-bit index value; overflow is reported as an error.
pub type IndexValue128 = i128;
/// 64-bit index value; overflow is reported as an error.
pub type IndexValue64 = i64;

pub type Params = GraphParams<IndexValue>;
pub type Params128 = GraphParams<IndexValue128>;
pub type Params64 = GraphParams<IndexValue64>;
