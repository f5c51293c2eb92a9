//! Exact laboratory for finite convexity spaces and their Helly-type invariants.
//!
//! The crate covers convexity spaces over at most 64 points ([`space`]),
//! concrete generators ([`generators`]), the Radon/Tverberg/Helly family of
//! invariants ([`invariants`]), exact rational LP ([`lp`]), uniform hypergraphs
//! and their associated convexity spaces ([`hypergraph`]), and the set-pair
//! construction used to bound Radon numbers ([`setpairs`]).

pub mod budget;
pub mod error;
pub mod generators;
pub mod hypergraph;
pub mod invariants;
pub mod lp;
pub mod nerve;
pub mod par;
pub mod pointset;
pub mod rng;
pub mod setpairs;
pub mod space;

pub use budget::{Bound, Budget};
pub use error::{Error, Result};
pub use pointset::PointSet;
pub use space::ConvexitySpace;
