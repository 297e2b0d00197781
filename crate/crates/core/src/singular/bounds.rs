use crate::exactalg::{ratio, Rational};
use crate::HomogeneousForm;
use crate::Result;

/// Genus bound `(K + C)·A/2 + 1` for a curve `A` of degree `deg_a` in the
/// plane, with `C` of degree `deg_c`: `(deg_c − 3)·deg_a/2 + 1`.
pub fn genus_bound(deg_c: i64, deg_a: i64) -> Rational {
    ratio((deg_c - 3) * deg_a, 2) + ratio(1, 1)
}

/// `K·A/2 + 1 = −3·deg_a/2 + 1`.
pub fn canonical_genus_bound(deg_a: i64) -> Rational {
    ratio(-3 * deg_a, 2) + ratio(1, 1)
}

/// `A² ≥ Σ μ(μ−1) + A·C`. A `false` value rules out a family with these
/// invariants meeting `C` in a single moving point.
pub fn lemma5_certificate(a_sq: i64, sum_mu: i64, a_dot_c: i64) -> bool {
    a_sq >= sum_mu + a_dot_c
}

/// Inputs of [`lemma5_certificate`] for a plane curve `a` against a curve of
/// degree `deg_c`: `(deg a², Σ μ(μ−1), deg a · deg_c)`.
pub fn lemma5_datum(a: &HomogeneousForm, deg_c: u32) -> Result<(i64, i64, i64)> {
    let d = a.degree() as i64;
    let profile = super::singularity_profile(a)?;
    Ok((d * d, profile.mu_sum() as i64, d * deg_c as i64))
}
