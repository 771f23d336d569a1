//! Extremal spectral graph theory at desk scale.
//!
//! Graph constructions for the Turán-type extremal families, spectral radius
//! solvers, exact characteristic polynomials, spectral symmetrization and an
//! exhaustive search harness that checks the extremal theorems on small
//! vertex counts.

pub mod charpoly;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod search;
pub mod spectra;
pub mod symmetrize;

pub use charpoly::Polynomial;
pub use constructions::PartSizes;
pub use error::{Error, Result};
pub use graph::{CanonicalForm, Graph};
pub use search::{Objective, Predicate, SearchOptions, VerificationReport};
pub use spectra::{PSpectralOptions, SpectralResult};
pub use symmetrize::SymmetrizationTrace;
