//! Projection from `(0:1:0)`: eliminating the middle coordinate turns the
//! intersection of two plane curves into the roots of a binary form.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::form::{HomogeneousForm, Matrix3, ProjectivePoint};
use super::rational::{int, pow, Rational};
use super::univariate::{interpolate, resultant, UnivariatePoly};
use crate::{Error, Result};

/// Binary form `Σ a_i s^i t^{d-i}` stored as its affine part `a(s)` plus the
/// formal degree; the root `(1:0)` has multiplicity `d - deg a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryForm {
    pub degree: usize,
    pub affine: UnivariatePoly,
}

/// A root `(s:t)` of a binary form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BinaryRoot {
    /// `(r : 1)`
    Finite(Rational),
    /// `(1 : 0)`
    Infinity,
}

impl BinaryRoot {
    /// Homogeneous coordinates `(s, t)`.
    pub fn coords(&self) -> (Rational, Rational) {
        match self {
            Self::Finite(r) => (r.clone(), Rational::one()),
            Self::Infinity => (Rational::one(), Rational::zero()),
        }
    }

    pub fn from_coords(s: &Rational, t: &Rational) -> Result<Self> {
        match (s.is_zero(), t.is_zero()) {
            (true, true) => Err(Error::Domain("zero binary root".into())),
            (_, true) => Ok(Self::Infinity),
            _ => Ok(Self::Finite(s / t)),
        }
    }
}

impl BinaryForm {
    pub fn new(degree: usize, affine: UnivariatePoly) -> Self {
        debug_assert!(affine.degree().map_or(true, |d| d <= degree));
        Self { degree, affine }
    }

    /// Interpolates a degree-`degree` binary form from its values at
    /// `(i : 1)`, `i = 0..=degree`.
    pub fn from_samples<F>(degree: usize, mut value: F) -> Result<Self>
    where
        F: FnMut(&Rational) -> Result<Rational>,
    {
        let mut pts = Vec::with_capacity(degree + 1);
        for i in 0..=degree as i64 {
            let s = int(i);
            let v = value(&s)?;
            pts.push((s, v));
        }
        Ok(Self::new(degree, interpolate(&pts)))
    }

    pub fn is_zero(&self) -> bool {
        self.affine.is_zero()
    }

    pub fn infinity_multiplicity(&self) -> usize {
        match self.affine.degree() {
            Some(d) => self.degree - d,
            None => self.degree,
        }
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        self.affine
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * pow(s, i as u32) * pow(t, (self.degree - i) as u32))
            .sum()
    }

    pub fn multiplicity_of(&self, root: &BinaryRoot) -> usize {
        match root {
            BinaryRoot::Infinity => self.infinity_multiplicity(),
            BinaryRoot::Finite(r) => self.affine.root_multiplicity(r),
        }
    }

    /// Square-free decomposition of the affine part plus the multiplicity of
    /// the root at infinity.
    pub fn squarefree_decomposition(&self) -> (Vec<(UnivariatePoly, usize)>, usize) {
        (self.affine.squarefree_decomposition(), self.infinity_multiplicity())
    }

    /// Distinct roots over the complex numbers.
    pub fn distinct_root_count(&self) -> usize {
        self.affine.distinct_root_count() + usize::from(self.infinity_multiplicity() > 0)
    }

    /// Rational roots with multiplicity, infinity last.
    pub fn rational_roots(&self) -> Vec<(BinaryRoot, usize)> {
        let mut out: Vec<(BinaryRoot, usize)> = self
            .affine
            .rational_roots()
            .into_iter()
            .map(|r| {
                let m = self.affine.root_multiplicity(&r);
                (BinaryRoot::Finite(r), m)
            })
            .collect();
        let inf = self.infinity_multiplicity();
        if inf > 0 {
            out.push((BinaryRoot::Infinity, inf));
        }
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let g = self.affine.gcd(&other.affine);
        let inf = self.infinity_multiplicity().min(other.infinity_multiplicity());
        let d = g.degree().unwrap_or(0) + inf;
        Self::new(d, g)
    }
}

/// Deterministic sequence of invertible integer matrices used to put curves
/// in general position. The first entry is the identity.
pub fn generic_transforms(count: usize) -> Vec<Matrix3> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    let mut out = vec![Matrix3::identity()];
    while out.len() < count {
        let mut rows = [[0i64; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = if i == j { rng.gen_range(1..=4) } else { rng.gen_range(-4..=4) };
            }
        }
        let m = Matrix3::from_ints(rows);
        if !m.det().is_zero() {
            out.push(m);
        }
    }
    out
}

/// `F(a, y, b)` as a polynomial in `y`.
pub fn fiber_of(f: &HomogeneousForm, root: &BinaryRoot) -> UnivariatePoly {
    let (a, b) = root.coords();
    let d = f.degree() as usize;
    let mut coeffs = vec![Rational::zero(); d + 1];
    for (e, c) in f.terms() {
        coeffs[e[1] as usize] += c * pow(&a, e[0]) * pow(&b, e[2]);
    }
    UnivariatePoly::new(coeffs)
}

/// `Res_{X1}(F, G)` as a binary form in `(X0, X2)` of degree `deg F · deg G`.
///
/// Both forms must contain the monomial `X1^deg`, i.e. `(0:1:0)` lies on
/// neither curve; otherwise a degree error is returned.
pub fn eliminate_middle(f: &HomogeneousForm, g: &HomogeneousForm) -> Result<BinaryForm> {
    let (df, dg) = (f.degree(), g.degree());
    if f.coeff([0, df, 0]).is_zero() || g.coeff([0, dg, 0]).is_zero() {
        return Err(Error::Degree("projection center lies on a curve".into()));
    }
    let d = (df * dg) as usize;
    BinaryForm::from_samples(d, |s| {
        let root = BinaryRoot::Finite(s.clone());
        resultant(&fiber_of(f, &root), &fiber_of(g, &root))
    })
}

/// Common zeros of two forms without a common component.
#[derive(Clone, Debug)]
pub struct CommonZeros {
    /// Rational intersection points with their intersection multiplicities.
    pub points: Vec<(ProjectivePoint, usize)>,
    /// Total multiplicity carried by non-rational points.
    pub irrational_multiplicity: usize,
    /// Number of distinct non-rational points.
    pub irrational_distinct: usize,
    /// Eliminant in the coordinates where it was computed.
    pub eliminant: BinaryForm,
    /// Coordinate change used: points were found for `F∘M`, `G∘M`.
    pub transform: Matrix3,
}

impl CommonZeros {
    pub fn total_multiplicity(&self) -> usize {
        self.points.iter().map(|(_, m)| m).sum::<usize>() + self.irrational_multiplicity
    }

    pub fn multiplicity_at(&self, p: &ProjectivePoint) -> usize {
        self.points.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m)
    }
}

/// Intersection of two plane curves: rational points with multiplicities
/// and a multiplicity count for the rest.
///
/// Each rational root of the eliminant must lift to a single point of the
/// fiber; if a fiber is shared with another point the next coordinate change
/// is tried.
pub fn common_zeros(f: &HomogeneousForm, g: &HomogeneousForm) -> Result<CommonZeros> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::CommonComponent);
    }
    'transforms: for m in generic_transforms(24) {
        let fm = f.substitute_linear(&m);
        let gm = g.substitute_linear(&m);
        let Ok(res) = eliminate_middle(&fm, &gm) else {
            continue;
        };
        if res.is_zero() {
            return Err(Error::CommonComponent);
        }
        let mut points = Vec::new();
        let mut rational_total = 0;
        for (root, mult) in res.rational_roots() {
            let h = fiber_of(&fm, &root).gcd(&fiber_of(&gm, &root));
            if h.distinct_root_count() != 1 {
                continue 'transforms;
            }
            let ys = h.rational_roots();
            if ys.len() != 1 {
                continue 'transforms;
            }
            let (a, b) = root.coords();
            let local = ProjectivePoint::new([a, ys[0].clone(), b])?;
            points.push((m.apply_point(&local)?, mult));
            rational_total += mult;
        }
        let (dec, inf) = res.squarefree_decomposition();
        let finite_distinct: usize = dec.iter().map(|(p, _)| p.degree().unwrap()).sum();
        let rational_distinct = points.len();
        let distinct = finite_distinct + usize::from(inf > 0);
        points.sort();
        return Ok(CommonZeros {
            points,
            irrational_multiplicity: res.degree - rational_total,
            irrational_distinct: distinct - rational_distinct,
            eliminant: res,
            transform: m,
        });
    }
    Err(Error::Internal("no coordinate change put the curves in general position".into()))
}
