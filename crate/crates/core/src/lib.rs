//! Chromatic numbers of lattice Voronoi graphs.
//!
//! Strict Voronoi vectors of a positive definite form generate a Cayley graph
//! on `Z^n`. This crate classifies those graphs up to isomorphism and pins
//! down their chromatic numbers with SAT: a lower bound from the unit ball
//! graph and an upper bound from a periodic coloring on a discrete torus.

pub mod automorphism;
pub mod catalog;
pub mod error;
pub mod exact;
pub mod graph;
pub mod iso;
mod linalg;
pub mod pipeline;
pub mod qform;
pub mod sat;
pub mod voronoi;

pub use automorphism::automorphism_order;
pub use catalog::{catalog, find_entry, CatalogEntry, GraphClass, GRAPH_CLASSES};
pub use error::{Error, Result};
pub use exact::chromatic_number_exact_small;
pub use graph::{ball_graph, is_proper_coloring, torus_graph, Coloring, FiniteGraph};
pub use iso::{classify, find_linear_isomorphism, invariant_signature, IsoClass, Signature, UnimodularMap};
pub use pipeline::{certify_entry, run_dpb, run_dtb, run_table4, run_table5, ChiCertificate, PipelineOptions};
pub use qform::{build_form, ray_matrix, QuadraticForm, RayIndex};
pub use sat::{
    chromatic_number_sat, decode_coloring, encode_k_coloring, solve, write_dimacs, CnfFormula,
    SatOutcome, SatStatus, SolverConfig,
};
pub use voronoi::{strict_voronoi_vectors, GeneratorSet};
