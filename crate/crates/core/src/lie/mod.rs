//! Root systems of classical type, weights, and Weyl group combinatorics.

mod datum;
mod weyl;

pub use datum::{Root, RootDatum, RootType, Weight, DEFAULT_RANK_CAP};
pub use weyl::{OrbitPoint, WeylElement, DEFAULT_GROUP_CAP};
