use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::bivariate::Poly2;
use super::rational::{format_rational, int, parse_rational, pow, Rational};
use crate::{Error, Result};

pub type Exponents = [u32; 3];

/// Ternary form of fixed degree with sparse rational coefficients.
///
/// Only nonzero coefficients are stored, so structural equality is
/// coefficient-wise equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HomogeneousForm {
    degree: u32,
    coeffs: BTreeMap<Exponents, Rational>,
}

impl HomogeneousForm {
    pub fn zero(degree: u32) -> Self {
        Self { degree, coeffs: BTreeMap::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0, 0, 0], c)
    }

    pub fn monomial(exps: Exponents, c: Rational) -> Self {
        let mut f = Self::zero(exps.iter().sum());
        if !c.is_zero() {
            f.coeffs.insert(exps, c);
        }
        f
    }

    pub fn variable(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    /// Linear form `a·X0 + b·X1 + c·X2`.
    pub fn linear(coeffs: &[Rational; 3]) -> Self {
        let mut f = Self::zero(1);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = [0; 3];
            e[i] = 1;
            f.add_term(e, c.clone());
        }
        f
    }

    pub fn from_terms<I>(degree: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut f = Self::zero(degree);
        for (e, c) in terms {
            if e.iter().sum::<u32>() != degree {
                return Err(Error::Degree(format!("monomial {e:?} is not of degree {degree}")));
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// Convenience constructor from integer coefficients; panics on a
    /// monomial of the wrong degree.
    pub fn from_int_terms(degree: u32, terms: &[(u32, u32, u32, i64)]) -> Self {
        Self::from_terms(degree, terms.iter().map(|&(a, b, c, k)| ([a, b, c], int(k))))
            .expect("monomial degree mismatch")
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: Exponents) -> Rational {
        self.coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical order: exponent triples descending by `(a, b)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.coeffs.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    /// All exponent triples of the given degree in canonical order.
    pub fn monomials(degree: u32) -> Vec<Exponents> {
        let mut out = Vec::new();
        for a in (0..=degree).rev() {
            for b in (0..=degree - a).rev() {
                out.push([a, b, degree - a - b]);
            }
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.degree);
        }
        Self {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < 3, "variable index out of range");
        let mut out = Self::zero(self.degree.saturating_sub(1));
        for (e, c) in &self.coeffs {
            if e[var] == 0 {
                continue;
            }
            let mut ne = *e;
            ne[var] -= 1;
            out.add_term(ne, c * int(e[var] as i64));
        }
        out
    }

    pub fn gradient(&self) -> [Self; 3] {
        [0, 1, 2].map(|i| self.partial_derivative(i))
    }

    pub fn eval(&self, x: &[Rational; 3]) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.coeffs {
            acc += c * pow(&x[0], e[0]) * pow(&x[1], e[1]) * pow(&x[2], e[2]);
        }
        acc
    }

    pub fn eval_at(&self, p: &ProjectivePoint) -> Rational {
        self.eval(p.coords())
    }

    pub fn vanishes_at(&self, p: &ProjectivePoint) -> bool {
        self.eval_at(p).is_zero()
    }

    pub fn gradient_at(&self, p: &ProjectivePoint) -> [Rational; 3] {
        self.gradient().map(|g| g.eval_at(p))
    }

    /// `f ∘ M`, i.e. `(f ∘ M)(Y) = f(M·Y)`. Errors on a singular matrix.
    pub fn substitute_projective(&self, m: &Matrix3) -> Result<Self> {
        if m.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute_linear(m))
    }

    /// `f(M·Y)` without the invertibility check.
    pub fn substitute_linear(&self, m: &Matrix3) -> Self {
        let lin: Vec<Self> = (0..3).map(|i| Self::linear(&m.0[i])).collect();
        let mut powers: Vec<Vec<Self>> = Vec::with_capacity(3);
        for l in &lin {
            let mut p = vec![Self::constant(Rational::one())];
            for k in 1..=self.degree as usize {
                let next = &p[k - 1] * l;
                p.push(next);
            }
            powers.push(p);
        }
        let mut out = Self::zero(self.degree);
        for (e, c) in &self.coeffs {
            let term = &(&powers[0][e[0] as usize] * &powers[1][e[1] as usize])
                * &powers[2][e[2] as usize];
            for (te, tc) in term.coeffs {
                out.add_term(te, tc * c);
            }
        }
        out
    }

    /// Some `c` with `self = c·other`, if the forms are proportional.
    pub fn proportionality(&self, other: &Self) -> Option<Rational> {
        if other.is_zero() || self.degree != other.degree {
            return self.is_zero().then(Rational::zero);
        }
        let (e0, c0) = other.coeffs.iter().next().unwrap();
        let ratio = self.coeff(*e0) / c0;
        (other.scale(&ratio) == *self).then_some(ratio)
    }

    /// Affine polynomial in local coordinates centered at `p`: the
    /// coordinate where `p` is 1 (its first nonzero one) is set to 1 and the
    /// remaining two, in increasing index order, become `(x, y)` shifted so
    /// `p` sits at the origin.
    pub fn localize(&self, p: &ProjectivePoint) -> Poly2 {
        let (chart, others) = p.chart();
        let c = p.coords();
        let x0 = c[others[0]].clone();
        let y0 = c[others[1]].clone();
        let mut raw = Poly2::zero();
        for (e, coef) in &self.coeffs {
            debug_assert!(e[chart] <= self.degree);
            raw.add_term((e[others[0]], e[others[1]]), coef.clone());
        }
        raw.translate(&x0, &y0)
    }

    pub fn to_json(&self) -> FormJson {
        FormJson {
            degree: self.degree,
            coeffs: self
                .terms()
                .map(|(e, c)| (e[0], e[1], e[2], format_rational(c)))
                .collect(),
        }
    }

    pub fn from_json(j: &FormJson) -> Result<Self> {
        let mut terms = Vec::with_capacity(j.coeffs.len());
        for (a, b, c, s) in &j.coeffs {
            terms.push(([*a, *b, *c], parse_rational(s)?));
        }
        Self::from_terms(j.degree, terms)
    }
}

/// Wire format: `{"degree": d, "coeffs": [[a, b, c, "num/den"], ...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson {
    pub degree: u32,
    pub coeffs: Vec<(u32, u32, u32, String)>,
}

fn merge(a: &HomogeneousForm, b: &HomogeneousForm, sign: &Rational) -> HomogeneousForm {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return b.scale(sign);
    }
    assert_eq!(a.degree, b.degree, "adding forms of different degree");
    let mut out = a.clone();
    for (e, c) in &b.coeffs {
        out.add_term(*e, c * sign);
    }
    out
}

impl Add for &HomogeneousForm {
    type Output = HomogeneousForm;
    fn add(self, rhs: Self) -> HomogeneousForm {
        merge(self, rhs, &Rational::one())
    }
}

impl Sub for &HomogeneousForm {
    type Output = HomogeneousForm;
    fn sub(self, rhs: Self) -> HomogeneousForm {
        merge(self, rhs, &-Rational::one())
    }
}

impl Neg for &HomogeneousForm {
    type Output = HomogeneousForm;
    fn neg(self) -> HomogeneousForm {
        self.scale(&-Rational::one())
    }
}

impl Mul for &HomogeneousForm {
    type Output = HomogeneousForm;
    fn mul(self, rhs: Self) -> HomogeneousForm {
        let mut out = HomogeneousForm::zero(self.degree + rhs.degree);
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &rhs.coeffs {
                out.add_term([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for HomogeneousForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*X{v}")?,
                    _ => write!(f, "*X{v}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

/// Point of the projective plane, stored with its first nonzero coordinate
/// scaled to 1 so scaling-equivalent triples compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint([Rational; 3]);

impl ProjectivePoint {
    pub fn new(coords: [Rational; 3]) -> Result<Self> {
        let Some(i) = coords.iter().position(|c| !c.is_zero()) else {
            return Err(Error::Domain("projective point with all coordinates zero".into()));
        };
        let inv = coords[i].recip();
        Ok(Self(coords.map(|c| c * &inv)))
    }

    pub fn from_ints(x: i64, y: i64, z: i64) -> Self {
        Self::new([int(x), int(y), int(z)]).expect("nonzero point")
    }

    pub fn coords(&self) -> &[Rational; 3] {
        &self.0
    }

    /// Index of the normalized coordinate and the two remaining indices.
    pub fn chart(&self) -> (usize, [usize; 2]) {
        let i = self.0.iter().position(|c| !c.is_zero()).unwrap();
        let others = match i {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        (i, others)
    }

    /// Parses `"x,y,z"` with rational entries.
    pub fn parse(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Malformed(format!("expected x,y,z: {s:?}")));
        }
        Self::new([
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        ])
        .map_err(|_| Error::Malformed(format!("zero point: {s:?}")))
    }

    pub fn to_strings(&self) -> [String; 3] {
        self.0.clone().map(|c| format_rational(&c))
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// 3×3 rational matrix acting on homogeneous coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix3(pub [[Rational; 3]; 3]);

impl Matrix3 {
    pub fn identity() -> Self {
        Self::diag([int(1), int(1), int(1)])
    }

    pub fn diag(d: [Rational; 3]) -> Self {
        let [a, b, c] = d;
        let z = Rational::zero;
        Self([[a, z(), z()], [z(), b, z()], [z(), z(), c]])
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Self(rows.map(|r| r.map(int)))
    }

    pub fn from_columns(cols: [[Rational; 3]; 3]) -> Self {
        let mut m = Self::identity();
        for (j, col) in cols.iter().enumerate() {
            for i in 0..3 {
                m.0[i][j] = col[i].clone();
            }
        }
        m
    }

    pub fn det(&self) -> Rational {
        let a = &self.0;
        &a[0][0] * (&a[1][1] * &a[2][2] - &a[1][2] * &a[2][1])
            - &a[0][1] * (&a[1][0] * &a[2][2] - &a[1][2] * &a[2][0])
            + &a[0][2] * (&a[1][0] * &a[2][1] - &a[1][1] * &a[2][0])
    }

    pub fn inverse(&self) -> Result<Self> {
        let d = self.det();
        if d.is_zero() {
            return Err(Error::SingularMatrix);
        }
        let a = &self.0;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| {
            &a[r0][c0] * &a[r1][c1] - &a[r0][c1] * &a[r1][c0]
        };
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        Ok(Self(adj.map(|r| r.map(|x| x / &d))))
    }

    pub fn apply(&self, v: &[Rational; 3]) -> [Rational; 3] {
        [0, 1, 2].map(|i| (0..3).map(|j| &self.0[i][j] * &v[j]).sum())
    }

    pub fn apply_point(&self, p: &ProjectivePoint) -> Result<ProjectivePoint> {
        ProjectivePoint::new(self.apply(p.coords()))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.0.iter().map(|r| r.iter().map(format_rational).collect()).collect()
    }

    pub fn from_strings(rows: &[Vec<String>]) -> Result<Self> {
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(Error::Malformed("transform must be 3x3".into()));
        }
        let mut m = Self::identity();
        for i in 0..3 {
            for j in 0..3 {
                m.0[i][j] = parse_rational(&rows[i][j])?;
            }
        }
        Ok(m)
    }
}

impl Mul for &Matrix3 {
    type Output = Matrix3;
    fn mul(self, rhs: Self) -> Matrix3 {
        let mut out = Matrix3::identity();
        for i in 0..3 {
            for j in 0..3 {
                out.0[i][j] = (0..3).map(|k| &self.0[i][k] * &rhs.0[k][j]).sum();
            }
        }
        out
    }
}

#[allow(dead_code)]
pub(crate) fn big(n: i64) -> BigInt {
    BigInt::from(n)
}
