//! String chain complexes on marked discs over GF(2).
//!
//! Generators are homotopy classes of string diagrams on a disc with `2n`
//! signed boundary points. [`hat`] implements the loopless complex, [`inf`]
//! the complex that also tracks closed loops and an Euler class, and
//! [`operators`] the creation and annihilation maps between different `n`.

pub mod error;
pub mod euler;
pub mod gf2;
pub mod hat;
pub mod inf;
pub mod marking;
pub mod operators;
pub mod report;
pub mod suture;
pub mod verify;

pub use error::{Error, Result};
pub use euler::{base_euler, chord_turning};
pub use gf2::{F2Matrix, F2Vector};
pub use hat::{boundary_hat, boundary_matrix_hat, homology_dimension, homology_hat, switch_w, HatComplex, HatHomology, HatVector};
pub use inf::{
    boundary_inf, f1_oracle, project_hat, truncated_boundary_matrix, truncated_homology, u_pow, InfElement, InfVector,
    TruncatedHomology,
};
pub use marking::{all_sites, enumerate_matchings, Letter, Marking, Matching, Sign, Site, Word};
pub use suture::{as_suture, enumerate_sutures, Face, FaceSign, Suture};
