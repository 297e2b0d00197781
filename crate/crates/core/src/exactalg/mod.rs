//! Exact arithmetic substrate: rationals, dense univariate polynomials,
//! ternary forms, small dense linear algebra and elimination.

mod bivariate;
mod eliminate;
mod form;
mod linalg;
pub mod modp;
mod rational;
mod univariate;

pub use bivariate::{Branch, Poly2};
pub use eliminate::{
    common_zeros, eliminate_middle, fiber_of, generic_transforms, BinaryForm, BinaryRoot, CommonZeros,
};
pub use form::{FormJson, HomogeneousForm, Matrix3, ProjectivePoint};
pub use linalg::{determinant, kernel, rank};
pub use rational::{format_rational, int, parse_rational, ratio, Rational};
pub use univariate::{discriminant_univariate, resultant, squarefree_part, UnivariatePoly};
