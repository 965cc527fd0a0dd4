//! Cohomology of circle quotients of Schubert varieties.
//!
//! The pipeline runs from Cartan data to the moment graph of a Schubert
//! variety `X(w)` in `G/P`, through the GKM description of `H*_T(X)` and its
//! image `H*_S(X)` for a circle `S = exp(R a)`, to the quotient
//! `H*_S(X) / (K_- + K_+)` that computes the cohomology ring of the
//! symplectic reduction of `X` at a regular level `r0`.

pub mod error;
pub mod lie;
pub mod linalg;
pub mod lp;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub mod schubert;
pub mod gkm;
pub mod kirwan;
pub mod config;
pub mod report;
