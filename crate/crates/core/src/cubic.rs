//! Plane cubics: smoothness, Hessian and flexes, Weierstrass normal form at a
//! flex, j-invariant and the chord-tangent group law.
//!
//! The normal form is `X0·X2² = 4·X1³ + α·X0²·X1 + β·X0³`, i.e. the affine
//! curve `y² = 4x³ + αx + β` with `x = X1/X0`, `y = X2/X0`, the flex at
//! `(0:0:1)` and inflection tangent `X0 = 0`.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::exactalg::{
    common_zeros, determinant, format_rational, int, kernel, parse_rational, HomogeneousForm,
    Matrix3, ProjectivePoint, Rational,
};
use crate::{Error, Result};

fn require_cubic(f: &HomogeneousForm) -> Result<()> {
    if f.degree() != 3 {
        return Err(Error::Degree(format!("expected a cubic, got degree {}", f.degree())));
    }
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("cubic"));
    }
    Ok(())
}

/// Determinant of the 3×3 matrix of second partials.
pub fn hessian(f: &HomogeneousForm) -> Result<HomogeneousForm> {
    if f.degree() < 2 {
        return Err(Error::Degree("hessian needs degree >= 2".into()));
    }
    let grad = f.gradient();
    let h: Vec<Vec<HomogeneousForm>> = grad.iter().map(|g| g.gradient().to_vec()).collect();
    let minor = |a: usize, b: usize, c: usize, d: usize| &(&h[1][a] * &h[2][b]) - &(&h[1][c] * &h[2][d]);
    let t0 = &h[0][0] * &minor(1, 2, 2, 1);
    let t1 = &h[0][1] * &minor(0, 2, 2, 0);
    let t2 = &h[0][2] * &minor(0, 1, 1, 0);
    Ok(&(&t0 - &t1) + &t2)
}

const QUADRIC_BASIS: [[u32; 3]; 6] = [[2, 0, 0], [0, 2, 0], [0, 0, 2], [1, 1, 0], [1, 0, 1], [0, 1, 1]];

/// Invariant of degree 12 in the coefficients, nonzero exactly when the
/// cubic is smooth: the determinant of the coefficient matrix of the six
/// quadrics `∂f/∂Xi`, `∂H/∂Xi` where `H` is the Hessian.
pub fn cubic_discriminant(f: &HomogeneousForm) -> Result<Rational> {
    require_cubic(f)?;
    let h = hessian(f)?;
    let rows: Vec<Vec<Rational>> = f
        .gradient()
        .iter()
        .chain(h.gradient().iter())
        .map(|q| QUADRIC_BASIS.iter().map(|e| q.coeff(*e)).collect())
        .collect();
    Ok(determinant(&rows))
}

pub fn is_smooth_cubic(f: &HomogeneousForm) -> Result<bool> {
    Ok(!cubic_discriminant(f)?.is_zero())
}

/// Intersection of a smooth cubic with its Hessian.
#[derive(Clone, Debug)]
pub struct Flexes {
    /// Always 9 by Bezout.
    pub count_with_multiplicity: usize,
    /// Distinct flexes over the complex numbers.
    pub distinct: usize,
    pub rational: Vec<ProjectivePoint>,
}

impl Flexes {
    pub fn eliminant_squarefree(&self) -> bool {
        self.distinct == self.count_with_multiplicity
    }
}

pub fn flexes(f: &HomogeneousForm) -> Result<Flexes> {
    if !is_smooth_cubic(f)? {
        return Err(Error::SingularCurve("flexes need a smooth cubic".into()));
    }
    let z = common_zeros(f, &hessian(f)?)?;
    Ok(Flexes {
        count_with_multiplicity: z.total_multiplicity(),
        distinct: z.points.len() + z.irrational_distinct,
        rational: z.points.into_iter().map(|(p, _)| p).collect(),
    })
}

/// `(α, β)` and the coordinate change `T` with `f∘T = c·(normal form)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeierstrassData {
    pub alpha: Rational,
    pub beta: Rational,
    pub transform: Matrix3,
}

#[derive(Serialize, Deserialize)]
pub struct WeierstrassJson {
    pub alpha: String,
    pub beta: String,
    pub transform: Vec<Vec<String>>,
}

impl WeierstrassData {
    /// Data for a curve already in normal form.
    pub fn normal(alpha: Rational, beta: Rational) -> Self {
        Self { alpha, beta, transform: Matrix3::identity() }
    }

    /// `X0·X2² − 4X1³ − αX0²X1 − βX0³`.
    pub fn normal_form(&self) -> HomogeneousForm {
        normal_form(&self.alpha, &self.beta)
    }

    /// `α³ + 27β²`, zero exactly for singular normal forms.
    pub fn discriminant(&self) -> Rational {
        &self.alpha * &self.alpha * &self.alpha + int(27) * &self.beta * &self.beta
    }

    pub fn is_smooth(&self) -> bool {
        !self.discriminant().is_zero()
    }

    pub fn to_json(&self) -> WeierstrassJson {
        WeierstrassJson {
            alpha: format_rational(&self.alpha),
            beta: format_rational(&self.beta),
            transform: self.transform.to_strings(),
        }
    }

    pub fn from_json(j: &WeierstrassJson) -> Result<Self> {
        Ok(Self {
            alpha: parse_rational(&j.alpha)?,
            beta: parse_rational(&j.beta)?,
            transform: Matrix3::from_strings(&j.transform)?,
        })
    }

    /// Affine coordinates of a point of the original curve.
    pub fn to_affine(&self, p: &ProjectivePoint) -> Result<AffineECPoint> {
        let w = self.transform.inverse()?.apply(p.coords());
        let pt = if w[0].is_zero() {
            if !w[1].is_zero() {
                return Err(Error::NotOnCurve);
            }
            AffineECPoint::Infinity
        } else {
            AffineECPoint::Affine(&w[1] / &w[0], &w[2] / &w[0])
        };
        self.check(&pt)?;
        Ok(pt)
    }

    /// Inverse of [`Self::to_affine`].
    pub fn to_projective(&self, p: &AffineECPoint) -> Result<ProjectivePoint> {
        let w = match p {
            AffineECPoint::Infinity => [int(0), int(0), int(1)],
            AffineECPoint::Affine(x, y) => [int(1), x.clone(), y.clone()],
        };
        self.transform.apply_point(&ProjectivePoint::new(w)?)
    }

    pub fn on_curve(&self, p: &AffineECPoint) -> bool {
        match p {
            AffineECPoint::Infinity => true,
            AffineECPoint::Affine(x, y) => {
                y * y == int(4) * x * x * x + &self.alpha * x + &self.beta
            }
        }
    }

    fn check(&self, p: &AffineECPoint) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }
}

pub fn normal_form(alpha: &Rational, beta: &Rational) -> HomogeneousForm {
    let mut f = HomogeneousForm::from_int_terms(3, &[(1, 0, 2, 1), (0, 3, 0, -4)]);
    f = &f - &HomogeneousForm::monomial([2, 1, 0], alpha.clone());
    &f - &HomogeneousForm::monomial([3, 0, 0], beta.clone())
}

/// Long Weierstrass cubic
/// `y²z + a1·xyz + a3·yz² = x³ + a2·x²z + a4·xz² + a6·z³` in `(x, y, z)`.
/// Its flex at `(0:1:0)` is the usual group origin.
pub fn long_weierstrass(a: [Rational; 5]) -> HomogeneousForm {
    let [a1, a2, a3, a4, a6] = a;
    let terms = [
        ([0, 2, 1], int(1)),
        ([1, 1, 1], a1),
        ([0, 1, 2], a3),
        ([3, 0, 0], int(-1)),
        ([2, 0, 1], -a2),
        ([1, 0, 2], -a4),
        ([0, 0, 3], -a6),
    ];
    HomogeneousForm::from_terms(3, terms).expect("cubic monomials")
}

fn elementary(rows: [[Rational; 3]; 3]) -> Matrix3 {
    Matrix3(rows)
}

/// Normal form at a flex `p` of a cubic smooth at `p`. Unlike
/// [`weierstrass_at_flex`] the rest of the curve may be singular, in which
/// case `α³ + 27β² = 0`.
pub fn normalize_at_flex(f: &HomogeneousForm, p: &ProjectivePoint) -> Result<WeierstrassData> {
    require_cubic(f)?;
    if !f.vanishes_at(p) {
        return Err(Error::NotOnCurve);
    }
    let grad = f.gradient_at(p);
    if grad.iter().all(Zero::is_zero) {
        return Err(Error::SingularCurve(format!("{p} is a singular point")));
    }
    // columns: off the tangent, along the tangent, p itself
    let i = grad.iter().position(|c| !c.is_zero()).unwrap();
    let mut c0 = [int(0), int(0), int(0)];
    c0[i] = int(1);
    let tangent = kernel(&[grad.to_vec()], 3);
    let pc = p.coords();
    let c1 = tangent
        .into_iter()
        .find(|v| {
            let m = Matrix3::from_columns([c0.clone(), [v[0].clone(), v[1].clone(), v[2].clone()], pc.clone()]);
            !m.det().is_zero()
        })
        .ok_or_else(|| Error::Internal("no tangent direction".into()))?;
    let mut t = Matrix3::from_columns([c0, [c1[0].clone(), c1[1].clone(), c1[2].clone()], pc.clone()]);
    let mut g = f.substitute_linear(&t);

    // the tangent W0 = 0 must meet the curve only at W1 = 0
    for e in [[0, 2, 1], [0, 1, 2], [0, 0, 3]] {
        if !g.coeff(e).is_zero() {
            return Err(Error::NotAFlex);
        }
    }
    let a = g.coeff([1, 0, 2]);
    let kappa = g.coeff([0, 3, 0]);
    if a.is_zero() || kappa.is_zero() {
        return Err(Error::Internal("unexpected shape at flex".into()));
    }

    let mut step = |g: &HomogeneousForm, m: Matrix3| {
        t = &t * &m;
        g.substitute_linear(&m)
    };
    let two_a = int(2) * &a;
    let (z, o) = (int(0), int(1));
    g = step(
        &g,
        elementary([
            [o.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), z.clone()],
            [-g.coeff([2, 0, 1]) / &two_a, -g.coeff([1, 1, 1]) / &two_a, o.clone()],
        ]),
    );
    let shift = -g.coeff([1, 2, 0]) / (int(3) * &kappa);
    g = step(
        &g,
        elementary([
            [o.clone(), z.clone(), z.clone()],
            [shift, o.clone(), z.clone()],
            [z.clone(), z.clone(), o.clone()],
        ]),
    );
    let lambda = int(-4) * &a / &kappa;
    g = step(&g, Matrix3::diag([o.clone(), lambda.clone(), lambda]));

    let c = g.coeff([1, 0, 2]);
    let alpha = -g.coeff([2, 1, 0]) / &c;
    let beta = -g.coeff([3, 0, 0]) / &c;
    if g != normal_form(&alpha, &beta).scale(&c) {
        return Err(Error::Internal("normalization did not reach the normal form".into()));
    }
    Ok(WeierstrassData { alpha, beta, transform: t })
}

/// Normal form of a smooth cubic at a rational flex.
pub fn weierstrass_at_flex(f: &HomogeneousForm, p: &ProjectivePoint) -> Result<WeierstrassData> {
    if !is_smooth_cubic(f)? {
        return Err(Error::SingularCurve("Weierstrass form needs a smooth cubic".into()));
    }
    normalize_at_flex(f, p)
}

/// Normal form at the first rational flex, if the curve has one.
pub fn weierstrass_any_flex(f: &HomogeneousForm) -> Result<WeierstrassData> {
    let fl = flexes(f)?;
    let p = fl
        .rational
        .first()
        .ok_or_else(|| Error::UnsupportedField("no rational flex".into()))?;
    weierstrass_at_flex(f, p)
}

/// `1728·α³ / (α³ + 27β²)`.
pub fn j_invariant(w: &WeierstrassData) -> Result<Rational> {
    let d = w.discriminant();
    if d.is_zero() {
        return Err(Error::SingularCurve("α³ + 27β² = 0".into()));
    }
    Ok(int(1728) * &w.alpha * &w.alpha * &w.alpha / d)
}

/// A point of `y² = 4x³ + αx + β`; `Infinity` is the flex origin.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AffineECPoint {
    Infinity,
    Affine(Rational, Rational),
}

impl AffineECPoint {
    pub fn from_ints(x: i64, y: i64) -> Self {
        Self::Affine(int(x), int(y))
    }

    pub fn neg(&self) -> Self {
        match self {
            Self::Infinity => Self::Infinity,
            Self::Affine(x, y) => Self::Affine(x.clone(), -y),
        }
    }
}

pub fn ec_add(w: &WeierstrassData, p: &AffineECPoint, q: &AffineECPoint) -> Result<AffineECPoint> {
    w.check(p)?;
    w.check(q)?;
    Ok(add_unchecked(w, p, q))
}

fn add_unchecked(w: &WeierstrassData, p: &AffineECPoint, q: &AffineECPoint) -> AffineECPoint {
    use AffineECPoint::*;
    let (x1, y1, x2, y2) = match (p, q) {
        (Infinity, _) => return q.clone(),
        (_, Infinity) => return p.clone(),
        (Affine(x1, y1), Affine(x2, y2)) => (x1, y1, x2, y2),
    };
    let lambda = if x1 != x2 {
        (y2 - y1) / (x2 - x1)
    } else if y1 == y2 && !y1.is_zero() {
        (int(12) * x1 * x1 + &w.alpha) / (int(2) * y1)
    } else {
        return Infinity;
    };
    let x3 = &lambda * &lambda / int(4) - x1 - x2;
    let y3 = -(y1 + &lambda * (&x3 - x1));
    Affine(x3, y3)
}

pub fn ec_scalar_mul(w: &WeierstrassData, n: i64, p: &AffineECPoint) -> Result<AffineECPoint> {
    w.check(p)?;
    let mut base = if n < 0 { p.neg() } else { p.clone() };
    let mut e = n.unsigned_abs();
    let mut acc = AffineECPoint::Infinity;
    while e > 0 {
        if e & 1 == 1 {
            acc = add_unchecked(w, &acc, &base);
        }
        base = add_unchecked(w, &base, &base);
        e >>= 1;
    }
    Ok(acc)
}

/// Smallest `n ≥ 1` with `[n]P = O`, or `None` beyond `bound`.
pub fn point_order(w: &WeierstrassData, p: &AffineECPoint, bound: u64) -> Result<Option<u64>> {
    w.check(p)?;
    if bound == 0 {
        return Err(Error::Domain("bound must be positive".into()));
    }
    let mut acc = p.clone();
    for n in 1..=bound {
        if acc == AffineECPoint::Infinity {
            return Ok(Some(n));
        }
        acc = add_unchecked(w, &acc, p);
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{discriminant_univariate, UnivariatePoly};
    use proptest::prelude::*;

    fn fermat() -> HomogeneousForm {
        HomogeneousForm::from_int_terms(3, &[(3, 0, 0, 1), (0, 3, 0, 1), (0, 0, 3, 1)])
    }

    fn nodal() -> HomogeneousForm {
        // X1²X2 − X0³ − X0²X2
        HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (3, 0, 0, -1), (2, 0, 1, -1)])
    }

    fn kubert9() -> HomogeneousForm {
        // y²z − 3xyz − 12yz² = x³ − 12x²z
        long_weierstrass([int(-3), int(-12), int(-12), int(0), int(0)])
    }

    #[test]
    fn hessians() {
        assert_eq!(hessian(&fermat()).unwrap(), HomogeneousForm::from_int_terms(3, &[(1, 1, 1, 216)]));
        let xyz = HomogeneousForm::from_int_terms(3, &[(1, 1, 1, 1)]);
        assert_eq!(hessian(&xyz).unwrap(), xyz.scale(&int(2)));
        let q = HomogeneousForm::from_int_terms(2, &[(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, 1)]);
        assert_eq!(hessian(&q).unwrap(), HomogeneousForm::constant(int(8)));
        assert!(hessian(&HomogeneousForm::variable(0)).is_err());
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth_cubic(&fermat()).unwrap());
        assert!(!is_smooth_cubic(&nodal()).unwrap());
        assert!(!is_smooth_cubic(&normal_form(&int(0), &int(0))).unwrap());
        assert!(is_smooth_cubic(&normal_form(&int(-4), &int(0))).unwrap());
        assert!(is_smooth_cubic(&kubert9()).unwrap());
        assert!(is_smooth_cubic(&HomogeneousForm::variable(0)).is_err());
    }

    #[test]
    fn smoothness_matches_normal_form_discriminant() {
        // α³ + 27β² against the discriminant of 4x³ + αx + β
        for (a, b) in [(-3, 2), (-3, -2), (0, 1), (1, 0), (-12, 16), (5, 7)] {
            let w = WeierstrassData::normal(int(a), int(b));
            let poly = UnivariatePoly::from_ints(&[b, a, 0, 4]);
            let disc = discriminant_univariate(&poly).unwrap();
            assert_eq!(disc.is_zero(), !w.is_smooth());
            assert_eq!(is_smooth_cubic(&w.normal_form()).unwrap(), w.is_smooth(), "({a},{b})");
        }
    }

    #[test]
    fn fermat_flexes() {
        let fl = flexes(&fermat()).unwrap();
        assert_eq!(fl.count_with_multiplicity, 9);
        assert!(fl.eliminant_squarefree());
        for p in [(1, -1, 0), (1, 0, -1), (0, 1, -1)] {
            assert!(fl.rational.contains(&ProjectivePoint::from_ints(p.0, p.1, p.2)));
        }
        assert_eq!(fl.rational.len(), 3);
        assert!(flexes(&nodal()).is_err());
    }

    #[test]
    fn normal_form_flex() {
        let f = normal_form(&int(-4), &int(0));
        let fl = flexes(&f).unwrap();
        assert!(fl.rational.contains(&ProjectivePoint::from_ints(0, 0, 1)));
        assert!(fl.eliminant_squarefree());
        let w = weierstrass_at_flex(&f, &ProjectivePoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!((w.alpha.clone(), w.beta.clone()), (int(-4), int(0)));
        assert_eq!(w.transform, Matrix3::identity());
        assert_eq!(j_invariant(&w).unwrap(), int(1728));
    }

    #[test]
    fn fermat_normalization() {
        for p in flexes(&fermat()).unwrap().rational {
            let w = weierstrass_at_flex(&fermat(), &p).unwrap();
            assert!(w.alpha.is_zero());
            assert!(!w.beta.is_zero());
            assert_eq!(j_invariant(&w).unwrap(), int(0));
            let g = fermat().substitute_linear(&w.transform);
            assert!(g.proportionality(&w.normal_form()).is_some());
        }
        assert_eq!(
            weierstrass_at_flex(&fermat(), &ProjectivePoint::from_ints(1, 1, 1)).unwrap_err(),
            Error::NotOnCurve
        );
        assert!(matches!(
            weierstrass_at_flex(&nodal(), &ProjectivePoint::from_ints(0, 1, 0)),
            Err(Error::SingularCurve(_))
        ));
    }

    #[test]
    fn not_a_flex() {
        let f = normal_form(&int(-4), &int(0));
        // (1:0:0) is the affine point (0, 0), a 2-torsion point
        assert_eq!(
            weierstrass_at_flex(&f, &ProjectivePoint::from_ints(1, 0, 0)).unwrap_err(),
            Error::NotAFlex
        );
    }

    #[test]
    fn j_values() {
        assert_eq!(j_invariant(&WeierstrassData::normal(int(0), int(5))).unwrap(), int(0));
        assert_eq!(j_invariant(&WeierstrassData::normal(int(-7), int(0))).unwrap(), int(1728));
        assert!(j_invariant(&WeierstrassData::normal(int(-3), int(1))).is_err());
    }

    #[test]
    fn j_agrees_across_flexes() {
        let f = kubert9();
        let fl = flexes(&f).unwrap();
        let js: Vec<Rational> = fl
            .rational
            .iter()
            .map(|p| j_invariant(&weierstrass_at_flex(&f, p).unwrap()).unwrap())
            .collect();
        assert!(!js.is_empty());
        assert!(js.windows(2).all(|w| w[0] == w[1]));
        let fl = flexes(&fermat()).unwrap();
        assert_eq!(fl.rational.len(), 3);
    }

    #[test]
    fn two_torsion() {
        let w = WeierstrassData::normal(int(-4), int(0));
        let p = AffineECPoint::from_ints(0, 0);
        assert_eq!(ec_add(&w, &p, &p).unwrap(), AffineECPoint::Infinity);
        assert_eq!(ec_scalar_mul(&w, 2, &p).unwrap(), AffineECPoint::Infinity);
        assert_eq!(point_order(&w, &p, 10).unwrap(), Some(2));
        assert_eq!(point_order(&w, &AffineECPoint::Infinity, 10).unwrap(), Some(1));
        assert_eq!(ec_scalar_mul(&w, 5, &AffineECPoint::Infinity).unwrap(), AffineECPoint::Infinity);
        assert_eq!(ec_add(&w, &p, &AffineECPoint::Infinity).unwrap(), p);
        assert_eq!(ec_add(&w, &AffineECPoint::from_ints(1, 1), &p).unwrap_err(), Error::NotOnCurve);
    }

    #[test]
    fn kubert_nine_torsion() {
        let f = kubert9();
        let w = weierstrass_at_flex(&f, &ProjectivePoint::from_ints(0, 1, 0)).unwrap();
        let p = w.to_affine(&ProjectivePoint::from_ints(0, 0, 1)).unwrap();
        assert_eq!(point_order(&w, &p, 20).unwrap(), Some(9));
        assert_eq!(ec_scalar_mul(&w, 9, &p).unwrap(), AffineECPoint::Infinity);
        assert_ne!(ec_scalar_mul(&w, 3, &p).unwrap(), AffineECPoint::Infinity);
        for n in 1..9 {
            let q = ec_scalar_mul(&w, n, &p).unwrap();
            assert_eq!(ec_scalar_mul(&w, -n, &p).unwrap(), q.neg());
            let back = w.to_projective(&q).unwrap();
            assert!(f.vanishes_at(&back));
        }
        assert_eq!(w.to_projective(&AffineECPoint::Infinity).unwrap(), ProjectivePoint::from_ints(0, 1, 0));
    }

    #[test]
    fn json_roundtrip() {
        let w = weierstrass_at_flex(&kubert9(), &ProjectivePoint::from_ints(0, 1, 0)).unwrap();
        assert_eq!(WeierstrassData::from_json(&w.to_json()).unwrap(), w);
    }

    fn small_matrix() -> impl Strategy<Value = Matrix3> {
        prop::array::uniform9(-3i64..=3)
            .prop_map(|v| Matrix3::from_ints([[v[0], v[1], v[2]], [v[3], v[4], v[5]], [v[6], v[7], v[8]]]))
            .prop_filter("invertible", |m| !m.det().is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn j_is_projectively_invariant(m in small_matrix()) {
            let f = kubert9();
            let p = ProjectivePoint::from_ints(0, 1, 0);
            let j0 = j_invariant(&weierstrass_at_flex(&f, &p).unwrap()).unwrap();
            let g = f.substitute_linear(&m);
            let q = m.inverse().unwrap().apply_point(&p).unwrap();
            let j1 = j_invariant(&weierstrass_at_flex(&g, &q).unwrap()).unwrap();
            prop_assert_eq!(j0, j1);
        }

        #[test]
        fn group_law_is_associative(a in -2i64..=2, b in -2i64..=2, c in -2i64..=2, i in 0usize..3) {
            // y² = 4x³ − 4x + 1 through (0,1), (1,1), (−1,1)
            let w = WeierstrassData::normal(int(-4), int(1));
            let base = [
                AffineECPoint::from_ints(0, 1),
                AffineECPoint::from_ints(1, 1),
                AffineECPoint::from_ints(-1, 1),
            ];
            let x = ec_scalar_mul(&w, a, &base[i]).unwrap();
            let y = ec_scalar_mul(&w, b, &base[(i + 1) % 3]).unwrap();
            let z = ec_scalar_mul(&w, c, &base[(i + 2) % 3]).unwrap();
            let l = ec_add(&w, &ec_add(&w, &x, &y).unwrap(), &z).unwrap();
            let r = ec_add(&w, &x, &ec_add(&w, &y, &z).unwrap()).unwrap();
            prop_assert!(w.on_curve(&l));
            prop_assert_eq!(&l, &r);
            prop_assert_eq!(ec_add(&w, &x, &y).unwrap(), ec_add(&w, &y, &x).unwrap());
        }
    }
}
