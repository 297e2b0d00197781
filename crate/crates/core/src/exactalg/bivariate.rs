use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::rational::{pow, Rational};
use super::univariate::UnivariatePoly;

/// Affine polynomial in local coordinates `(x, y)`, used for germs of
/// plane curves at a point and for blow-up charts.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

/// Which coordinate parametrizes a smooth branch through the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `y = series(x)`
    YOfX(Vec<Rational>),
    /// `x = series(y)`
    XOfY(Vec<Rational>),
}

impl Poly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: &[((u32, u32), Rational)]) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(*e, c.clone());
        }
        p
    }

    pub fn from_int_terms(terms: &[(u32, u32, i64)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in terms {
            p.add_term((i, j), super::int(c));
        }
        p
    }

    pub fn add_term(&mut self, e: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|(i, j)| i + j).max().unwrap_or(0)
    }

    /// Lowest total degree of a term: 0 off the curve, 1 at a smooth point.
    /// `None` for the zero polynomial.
    pub fn multiplicity(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|((i, j), c)| c * pow(x, *i) * pow(y, *j))
            .sum()
    }

    /// `f(x + x0, y + y0)`.
    pub fn translate(&self, x0: &Rational, y0: &Rational) -> Self {
        if x0.is_zero() && y0.is_zero() {
            return self.clone();
        }
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            for a in 0..=*i {
                let ca = binom(*i, a) * pow(x0, i - a);
                if ca.is_zero() {
                    continue;
                }
                for b in 0..=*j {
                    let cb = binom(*j, b) * pow(y0, j - b);
                    if cb.is_zero() {
                        continue;
                    }
                    out.add_term((a, b), c * &ca * cb);
                }
            }
        }
        out
    }

    /// Tangent cone of degree `m` in slope form: `T(1, t)` where the cone is
    /// `Σ c_i x^i y^{m-i}`. The direction `x = 0` has multiplicity
    /// `m - deg T(1, t)`.
    pub fn tangent_cone(&self, m: u32) -> UnivariatePoly {
        let mut coeffs = vec![Rational::zero(); m as usize + 1];
        for ((i, j), c) in &self.terms {
            if i + j == m {
                coeffs[*j as usize] = c.clone();
            }
        }
        UnivariatePoly::new(coeffs)
    }

    /// Strict transform in the chart `y = x·(y1 + t)`, divided by `x^m`.
    pub fn blow_up_slope(&self, m: u32, t: &Rational) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            debug_assert!(i + j >= m);
            out.add_term((i + j - m, *j), c.clone());
        }
        out.translate(&Rational::zero(), t)
    }

    /// Strict transform in the chart `x = x1·y` at `x1 = 0`, divided by `y^m`.
    pub fn blow_up_vertical(&self, m: u32) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            debug_assert!(i + j >= m);
            out.add_term((*i, i + j - m), c.clone());
        }
        out
    }

    /// Power series of the smooth branch through the origin, to `order`
    /// terms (coefficients of `u^0 .. u^{order-1}`). Requires multiplicity 1.
    pub fn smooth_branch(&self, order: usize) -> Branch {
        let a = self.coeff(1, 0);
        let b = self.coeff(0, 1);
        let (f, swap) = if !b.is_zero() { (self.clone(), false) } else { (self.swapped(), true) };
        let lin = if swap { a } else { b };
        assert!(!lin.is_zero(), "smooth_branch needs a smooth point");
        let mut phi = vec![Rational::zero(); order.max(1)];
        for n in 1..order {
            let s = f.substitute_series(&phi, n + 1);
            let c = &s[n];
            phi[n] = -c / &lin;
        }
        if swap {
            Branch::XOfY(phi)
        } else {
            Branch::YOfX(phi)
        }
    }

    fn swapped(&self) -> Self {
        let mut out = Self::zero();
        for ((i, j), c) in &self.terms {
            out.add_term((*j, *i), c.clone());
        }
        out
    }

    /// `f(u, φ(u)) mod u^len`.
    pub fn substitute_series(&self, phi: &[Rational], len: usize) -> Vec<Rational> {
        let max_j = self.terms.keys().map(|(_, j)| *j).max().unwrap_or(0) as usize;
        let mut powers = vec![series_one(len)];
        for k in 1..=max_j {
            let next = series_mul(&powers[k - 1], phi, len);
            powers.push(next);
        }
        let mut out = vec![Rational::zero(); len];
        for ((i, j), c) in &self.terms {
            let i = *i as usize;
            if i >= len {
                continue;
            }
            for (k, v) in powers[*j as usize].iter().enumerate() {
                if i + k >= len {
                    break;
                }
                if !v.is_zero() {
                    out[i + k] += c * v;
                }
            }
        }
        out
    }

    /// Restriction to a branch as a power series with `len` terms.
    pub fn series_along(&self, branch: &Branch, len: usize) -> Vec<Rational> {
        match branch {
            Branch::YOfX(phi) => self.substitute_series(&pad(phi, len), len),
            Branch::XOfY(phi) => self.swapped().substitute_series(&pad(phi, len), len),
        }
    }

    /// Vanishing order of `self` along a branch, if below `len`.
    pub fn order_along(&self, branch: &Branch, len: usize) -> Option<usize> {
        self.series_along(branch, len).iter().position(|c| !c.is_zero())
    }
}

fn pad(phi: &[Rational], len: usize) -> Vec<Rational> {
    let mut v = phi.to_vec();
    v.resize(len.max(v.len()), Rational::zero());
    v
}

fn series_one(len: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); len];
    if len > 0 {
        v[0] = Rational::one();
    }
    v
}

fn series_mul(a: &[Rational], b: &[Rational], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn binom(n: u32, k: u32) -> Rational {
    Rational::from_integer(binomial(BigInt::from(n), BigInt::from(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int;

    #[test]
    fn multiplicities() {
        // node y^2 - x^2 - x^3
        let node = Poly2::from_int_terms(&[(0, 2, 1), (2, 0, -1), (3, 0, -1)]);
        assert_eq!(node.multiplicity(), Some(2));
        assert_eq!(node.tangent_cone(2), UnivariatePoly::from_ints(&[-1, 0, 1]));
        let moved = node.translate(&int(1), &int(0));
        assert_eq!(moved.eval(&int(-1), &int(0)), int(0));
    }

    #[test]
    fn blow_up_tacnode() {
        // y^2 - x^4 -> y1^2 - x^2
        let tac = Poly2::from_int_terms(&[(0, 2, 1), (4, 0, -1)]);
        let b = tac.blow_up_slope(2, &int(0));
        assert_eq!(b, Poly2::from_int_terms(&[(0, 2, 1), (2, 0, -1)]));
        let v = tac.blow_up_vertical(2);
        assert_eq!(v, Poly2::from_int_terms(&[(0, 0, 1), (4, 2, -1)]));
    }

    #[test]
    fn branch_order() {
        // cusp y^2 - x^3 along the smooth curve y = 0 has order 3
        let cusp = Poly2::from_int_terms(&[(0, 2, 1), (3, 0, -1)]);
        let line = Poly2::from_int_terms(&[(0, 1, 1)]);
        let br = line.smooth_branch(8);
        assert_eq!(cusp.order_along(&br, 8), Some(3));
        // circle x^2 + y^2 - 2y through origin, branch y = x^2/2 + ...
        let circle = Poly2::from_int_terms(&[(2, 0, 1), (0, 2, 1), (0, 1, -2)]);
        let br = circle.smooth_branch(6);
        assert_eq!(circle.order_along(&br, 6), None);
        assert_eq!(line.order_along(&br, 6), Some(2));
    }
}
