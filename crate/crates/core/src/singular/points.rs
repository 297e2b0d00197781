use num_traits::Zero;

use super::resolve::{multiplicity_sequence, SingularityProfile};
use crate::exactalg::modp::form_irreducible_over_q;
use crate::exactalg::{
    eliminate_middle, generic_transforms, int, BinaryForm, HomogeneousForm, ProjectivePoint,
};
use crate::{Error, Result};

const COMBINATIONS: [[i64; 3]; 4] = [[1, 2, 3], [3, -1, 2], [2, 5, -7], [-4, 3, 1]];

/// `Res_{X1}` in the first coordinate system of the standard sequence where
/// it is defined.
fn eliminant_somewhere(f: &HomogeneousForm, g: &HomogeneousForm) -> Option<BinaryForm> {
    generic_transforms(16).into_iter().find_map(|m| {
        eliminate_middle(&f.substitute_linear(&m), &g.substitute_linear(&m)).ok()
    })
}

/// No repeated component: `f` shares no component with a generic
/// combination of its partial derivatives.
pub fn is_reduced(f: &HomogeneousForm) -> bool {
    if f.is_zero() {
        return false;
    }
    if f.degree() <= 1 {
        return true;
    }
    let grad = f.gradient();
    COMBINATIONS.iter().any(|c| {
        let mut l = HomogeneousForm::zero(f.degree() - 1);
        for (ci, gi) in c.iter().zip(grad.iter()) {
            l = &l + &gi.scale(&int(*ci));
        }
        eliminant_somewhere(f, &l).is_some_and(|r| !r.is_zero())
    })
}

/// All singular points, which must be rational.
///
/// In generic coordinates the pairwise eliminants of the partials share a
/// factor at the projection of every singular point. Rational roots of the
/// common factor are lifted through the fibers; a non-rational root that
/// survives every coordinate change tried is reported as unsupported.
pub fn singular_points(f: &HomogeneousForm) -> Result<Vec<ProjectivePoint>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("curve"));
    }
    if f.degree() <= 1 {
        return Ok(Vec::new());
    }
    if !is_reduced(f) {
        return Err(Error::NonReduced);
    }
    let mut irrational_seen = false;
    'transforms: for m in generic_transforms(8) {
        let g = f.substitute_linear(&m);
        let grad = g.gradient();
        let mut common: Option<BinaryForm> = None;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let Ok(r) = eliminate_middle(&grad[i], &grad[j]) else {
                continue 'transforms;
            };
            if r.is_zero() {
                continue 'transforms;
            }
            common = Some(match common {
                None => r,
                Some(c) => c.gcd(&r),
            });
        }
        let common = common.unwrap();
        let mut points = Vec::new();
        let mut rational_distinct = 0;
        for (root, _) in common.rational_roots() {
            rational_distinct += 1;
            let fib: Vec<_> = grad.iter().map(|p| crate::exactalg::fiber_of(p, &root)).collect();
            let h = fib[0].gcd(&fib[1]).gcd(&fib[2]);
            let ys = h.rational_roots();
            if ys.len() < h.distinct_root_count() {
                return Err(Error::UnsupportedField("singular point with irrational coordinates".into()));
            }
            let (a, b) = root.coords();
            for y in ys {
                let q = ProjectivePoint::new([a.clone(), y, b.clone()])?;
                points.push(m.apply_point(&q)?);
            }
        }
        if common.distinct_root_count() > rational_distinct {
            irrational_seen = true;
            continue;
        }
        points.sort();
        debug_assert!(points.iter().all(|p| f.gradient_at(p).iter().all(Zero::is_zero)));
        return Ok(points);
    }
    if irrational_seen {
        Err(Error::UnsupportedField("singular locus not rational".into()))
    } else {
        Err(Error::Internal("no coordinate change separated the partials".into()))
    }
}

/// Singular points with their infinitely-near trees.
pub fn singularity_profile(f: &HomogeneousForm) -> Result<SingularityProfile> {
    let mut points = Vec::new();
    for p in singular_points(f)? {
        let node = multiplicity_sequence(f, &p)?;
        points.push((p, node));
    }
    Ok(SingularityProfile { points })
}

/// `(d−1)(d−2)/2`.
pub fn arithmetic_genus(d: u32) -> i64 {
    let d = d as i64;
    (d - 1) * (d - 2) / 2
}

/// Geometric genus `(d−1)(d−2)/2 − Σ μ(μ−1)/2` of a reduced irreducible
/// curve. Irreducibility over the rationals is certified unless
/// `assume_irreducible` is set.
pub fn geometric_genus(f: &HomogeneousForm, assume_irreducible: bool) -> Result<i64> {
    Ok(genus_with_profile(f, assume_irreducible)?.0)
}

pub fn genus_with_profile(
    f: &HomogeneousForm,
    assume_irreducible: bool,
) -> Result<(i64, SingularityProfile)> {
    if f.degree() == 0 || f.is_zero() {
        return Err(Error::Degree("genus needs a curve of positive degree".into()));
    }
    if !is_reduced(f) {
        return Err(Error::NonReduced);
    }
    if !assume_irreducible && !form_irreducible_over_q(f) {
        return Err(Error::Reducible);
    }
    let profile = singularity_profile(f)?;
    let g = arithmetic_genus(f.degree()) - profile.delta() as i64;
    if g < 0 {
        return Err(Error::Internal(format!("negative genus {g}")));
    }
    Ok((g, profile))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nodal() -> HomogeneousForm {
        HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (3, 0, 0, -1), (2, 0, 1, -1)])
    }

    fn tricuspidal() -> HomogeneousForm {
        // X0²X1² + X1²X2² + X2²X0² − 2X0X1X2(X0 + X1 + X2)
        HomogeneousForm::from_int_terms(
            4,
            &[
                (2, 2, 0, 1),
                (0, 2, 2, 1),
                (2, 0, 2, 1),
                (2, 1, 1, -2),
                (1, 2, 1, -2),
                (1, 1, 2, -2),
            ],
        )
    }

    fn fermat(d: u32) -> HomogeneousForm {
        HomogeneousForm::from_int_terms(d, &[(d, 0, 0, 1), (0, d, 0, 1), (0, 0, d, 1)])
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(&nodal()));
        let xyz = HomogeneousForm::from_int_terms(3, &[(1, 1, 1, 1)]);
        assert!(is_reduced(&xyz));
        let x2y = HomogeneousForm::from_int_terms(3, &[(2, 1, 0, 1)]);
        assert!(!is_reduced(&x2y));
    }

    #[test]
    fn singular_locus() {
        assert_eq!(singular_points(&nodal()).unwrap(), vec![ProjectivePoint::from_ints(0, 0, 1)]);
        assert!(singular_points(&fermat(3)).unwrap().is_empty());
        let pts = singular_points(&tricuspidal()).unwrap();
        assert_eq!(pts.len(), 3);
        for p in [(1, 0, 0), (0, 1, 0), (0, 0, 1)] {
            assert!(pts.contains(&ProjectivePoint::from_ints(p.0, p.1, p.2)));
        }
        // three concurrent-free lines XYZ: the three vertices
        let xyz = HomogeneousForm::from_int_terms(3, &[(1, 1, 1, 1)]);
        assert_eq!(singular_points(&xyz).unwrap().len(), 3);
    }

    #[test]
    fn irrational_singular_points_are_rejected() {
        // (X1² − 2X0²)·X2: the line meets the two conjugate lines at (1:±√2:0)
        // and the pair crosses at (0:0:1)
        let f = HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (2, 0, 1, -2)]);
        assert!(matches!(singular_points(&f), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn genera() {
        assert_eq!(geometric_genus(&fermat(3), false).unwrap(), 1);
        assert_eq!(geometric_genus(&nodal(), false).unwrap(), 0);
        let cusp = HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (3, 0, 0, -1)]);
        assert_eq!(geometric_genus(&cusp, false).unwrap(), 0);
        assert_eq!(geometric_genus(&tricuspidal(), false).unwrap(), 0);
        for d in 1..=5 {
            assert_eq!(geometric_genus(&fermat(d), false).unwrap(), arithmetic_genus(d));
        }
        let lines = HomogeneousForm::from_int_terms(2, &[(1, 1, 0, 1)]);
        assert_eq!(geometric_genus(&lines, false).unwrap_err(), Error::Reducible);
    }

    #[test]
    fn tricuspidal_profile() {
        let p = singularity_profile(&tricuspidal()).unwrap();
        assert_eq!(p.shapes(), vec!["2", "2", "2"]);
        assert_eq!(p.delta(), 3);
    }
}
