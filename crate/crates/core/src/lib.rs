//! Edge-length vectors of Hamiltonian paths and cycles on circulant
//! instances: greedy path constructions, divisor feasibility, exhaustive
//! enumeration for small `n`, and exact polytope analysis of the resulting
//! edge-length polytopes.

pub mod bhr;
pub mod blg;
pub mod circulant;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod gseq;
pub mod hull;
pub mod io;
mod packing;
pub mod rational;

pub use bhr::{check_bhr, count_realizable_multisets, realizable_path, realizable_path_vectors, BhrVerdict};
pub use blg::{
    build_blg_path, count_blg, encoding_of_permutation, encoding_to_costs, encoding_to_permutation,
    encoding_to_vector, enumerate_encodings, extend_to_cycle, extended_cycle, lower_bound_vertices, EncodingEntry,
    EncodingSequence, VertexLowerBound, VertexPath,
};
pub use circulant::{
    component_count, edge_length, is_hamiltonian_lengthset, stripe_partition, CirculantCosts, CirculantGraph,
    EdgeKind, EdgeLengthVector, InstanceParams, StripePartition,
};
pub use enumerate::{contains_vector, cycle_count, enumerate_cycle_vectors, EnumerateOptions, VectorSet};
pub use error::{Error, Result};
pub use fixtures::{fixtures, FixtureTable};
pub use gseq::{blg_edge_multiset, g_sequence, min_path_cost, CostPermutation, GSequence};
pub use hull::{
    certify_unique_optimum, certify_vertex, enumerate_facets, enumerate_vertices, predicted_vertex_count, Facet,
    HullSummary, PointSet, VertexPrediction,
};
pub use rational::Rational;
