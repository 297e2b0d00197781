//! Exact enumerative geometry of rational curves that meet a smooth plane
//! cubic in a single point.
//!
//! Everything here works over the rationals with arbitrary precision:
//! Kontsevich numbers, contact-point lattices, flexes and Weierstrass
//! normalization, blow-up resolution of plane curve singularities, and the
//! pencil discriminants behind the 306 / 297 count of unisecant rational
//! cubics.

pub mod cli;
pub mod cubic;
mod error;
pub mod exactalg;
pub mod fixtures;
pub mod kontsevich;
pub mod pencils;
pub mod singular;
pub mod torsion;

pub use error::{Error, Result};
pub use exactalg::{HomogeneousForm, Matrix3, ProjectivePoint, Rational, UnivariatePoly};
