//! Exact structure-constant computations for finite-dimensional Hopf algebras,
//! their Galois objects, and the quantum torsors they carry.

pub mod builtins;
pub mod comodule;
pub mod constructions;
pub mod error;
pub mod exactlin;
pub mod format;
pub mod hopfcore;
pub mod report;
pub mod suite;
pub mod torsor;
pub mod ydribbon;

pub use error::{Error, Result};
