//! Exact spectral analysis of tournaments.
//!
//! A tournament is a complete graph with every edge oriented. This crate
//! builds the classical families (transitive orders, quadratic-residue
//! tournaments, rotational tournaments), computes characteristic and
//! skew-characteristic polynomials in exact arbitrary-precision arithmetic,
//! decides whether all k-vertex subtournaments share one spectrum
//! ("k-spectral monomorphy"), classifies tournaments by the structure
//! theorems that govern that property, and exhaustively enumerates small
//! orders to confirm the classifications empirically.

pub mod census;
mod error;
pub mod exact;
pub mod skew;
pub mod spectra;
pub mod tournament;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{IntMatrix, IntPoly, RatPoly, RatScalar};
pub use tournament::{StructureReport, Tournament, VertexSet};
