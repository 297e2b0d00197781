//! Plane curve singularities: infinitely-near trees from iterated blow-ups,
//! delta invariants and geometric genus, local intersection numbers, weak
//! types, one-parameter families and the genus bounds for curves meeting a
//! fixed curve in one point.

mod bounds;
mod family;
mod intersect;
mod points;
mod resolve;

pub use bounds::{canonical_genus_bound, genus_bound, lemma5_certificate, lemma5_datum};
pub use family::{family_derivative_check, weak_type_check, CurveFamily, FamilyCheck, WeakType};
pub use intersect::{
    blowup_intersection_identity, germ_intersection, intersect, local_intersection,
    local_intersection_blowup, local_intersection_resultant, transform_multiplicities,
    IdentitySides, Intersection,
};
pub use points::{
    arithmetic_genus, genus_with_profile, geometric_genus, is_reduced, singular_points,
    singularity_profile,
};
pub use resolve::{
    delta_invariant, local_multiplicity, multiplicity_sequence, resolve_germ, ChartStep,
    ProfileNode, SingularityProfile, MAX_DEPTH,
};
