//! Exact decision procedures for Serre's condition S_r, sequential S_r, and
//! (sequential) Cohen-Macaulayness of simplicial complexes and graph
//! independence complexes.
//!
//! Everything is computed over an explicit coefficient field with exact
//! arithmetic: reduced and relative homology come from boundary-matrix ranks
//! (fraction-free over the rationals, modular over GF(p)), and every verdict
//! ships with a re-checkable witness. Two independent routes decide the
//! sequential conditions: the homological criteria on links and skeletons,
//! and the Alexander-dual route through componentwise-linear resolutions,
//! whose Betti tables are themselves cross-checked by a brute-force Koszul
//! oracle.

#![forbid(unsafe_code)]

pub mod betti;
pub mod complex;
pub mod decompose;
pub mod error;
pub mod face;
pub mod field;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod report;
pub mod rng;
pub mod serre;

pub use betti::{
    betti_face_ring, betti_ideal, is_cw_linear_first_r, is_linear_first_r,
    koszul_betti_face_ring, koszul_betti_ideal, pd_and_depth, BettiSubject, BettiTable,
};
pub use complex::{RelativePair, SimplicialComplex};
pub use decompose::{is_shellable, is_vertex_decomposable};
pub use error::{Caps, Error, Result};
pub use face::Face;
pub use field::FieldSpec;
pub use graph::{BatteryReport, CycleParity, Graph};
pub use homology::{
    boundary_matrices, reduced_homology, reduced_homology_degree, relative_homology,
    relative_homology_degree, BoundaryMatrices, HomologyVector,
};
pub use ideal::{complex_of_ideal, sr_ideal, SquarefreeIdeal};
pub use report::{CheckReport, Witness};
pub use rng::SplitMix64;
pub use serre::{
    is_cm, is_relative_sr, is_seq_cm, is_seq_s2_local, is_seq_sr_relative, is_seq_sr_skeleton,
    is_sr,
};
