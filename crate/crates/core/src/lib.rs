//! Merged subdivision graphs `[S(G)]^{H1}_{H2}`: construction, closed-form
//! spectra, spanning-tree counts and Kirchhoff indices, each checked against
//! independent exact and numeric oracles.

pub mod closed_form;
pub mod commuting;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod graph;
pub mod invariants;
pub mod io;
pub mod matrix;
pub mod numeric;
pub mod suite;

pub use error::{Error, Result};
pub use graph::{make_family, Family, Graph, MatrixKind};
pub use matrix::IntMatrix;
