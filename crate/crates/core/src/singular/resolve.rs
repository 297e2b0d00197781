use std::fmt;

use serde_json::{json, Value};

use crate::exactalg::{format_rational, HomogeneousForm, Poly2, ProjectivePoint, Rational, UnivariatePoly};
use crate::{Error, Result};

/// Maximum number of successive blow-ups over one point.
pub const MAX_DEPTH: usize = 64;

/// One blow-up chart, centered at the point of the exceptional divisor in
/// the given direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChartStep {
    /// `y = x·(y1 + t)`, centered at `y1 = 0`.
    Slope(Rational),
    /// `x = x1·y`, centered at `x1 = 0`.
    Vertical,
}

impl ChartStep {
    /// Transform of `a` under this chart after dividing by the `m`-th power
    /// of the exceptional divisor.
    pub fn apply(&self, a: &Poly2, m: u32) -> Poly2 {
        match self {
            ChartStep::Slope(t) => a.blow_up_slope(m, t),
            ChartStep::Vertical => a.blow_up_vertical(m),
        }
    }
}

impl fmt::Display for ChartStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChartStep::Slope(t) => write!(f, "slope {}", format_rational(t)),
            ChartStep::Vertical => write!(f, "vertical"),
        }
    }
}

/// A point of the infinitely-near tree: multiplicity of the strict
/// transform there, chart path from the base point, and the infinitely near
/// points of multiplicity at least 2 on its exceptional divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileNode {
    pub multiplicity: u32,
    pub path: Vec<ChartStep>,
    pub children: Vec<ProfileNode>,
}

impl ProfileNode {
    /// `Σ μ(μ−1)/2` over the tree.
    pub fn delta(&self) -> u64 {
        let m = self.multiplicity as u64;
        m * m.saturating_sub(1) / 2 + self.children.iter().map(|c| c.delta()).sum::<u64>()
    }

    /// Multiplicities in preorder.
    pub fn multiplicities(&self) -> Vec<u32> {
        let mut out = vec![self.multiplicity];
        for c in &self.children {
            out.extend(c.multiplicities());
        }
        out
    }

    /// `Σ μ(μ−1)` over the tree.
    pub fn mu_sum(&self) -> u64 {
        2 * self.delta()
    }

    /// Same tree with every multiplicity replaced.
    pub fn map(&self, f: &impl Fn(&ProfileNode) -> u32) -> ProfileNode {
        ProfileNode {
            multiplicity: f(self),
            path: self.path.clone(),
            children: self.children.iter().map(|c| c.map(f)).collect(),
        }
    }

    /// Tree shape with multiplicities, ignoring chart coordinates.
    pub fn shape(&self) -> String {
        if self.children.is_empty() {
            return self.multiplicity.to_string();
        }
        let inner: Vec<String> = self.children.iter().map(|c| c.shape()).collect();
        format!("{}({})", self.multiplicity, inner.join(","))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "multiplicity": self.multiplicity.to_string(),
            "chart": self.path.last().map(|s| s.to_string()).unwrap_or_else(|| "base".into()),
            "children": self.children.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }
}

/// Singular points of a curve with their trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityProfile {
    pub points: Vec<(ProjectivePoint, ProfileNode)>,
}

impl SingularityProfile {
    pub fn delta(&self) -> u64 {
        self.points.iter().map(|(_, n)| n.delta()).sum()
    }

    pub fn mu_sum(&self) -> u64 {
        2 * self.delta()
    }

    /// Sorted tree shapes; equal for equisingular curves.
    pub fn shapes(&self) -> Vec<String> {
        let mut v: Vec<String> = self.points.iter().map(|(_, n)| n.shape()).collect();
        v.sort();
        v
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.points
                .iter()
                .map(|(p, n)| {
                    json!({
                        "point": p.to_strings(),
                        "multiplicities": n.multiplicities().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "delta": n.delta().to_string(),
                        "tree": n.to_json(),
                    })
                })
                .collect(),
        )
    }
}

/// Tangent directions of a germ of multiplicity `m`: rational directions
/// with multiplicities, plus the non-rational factors of the cone.
pub(crate) struct Directions {
    pub rational: Vec<(ChartStep, usize)>,
    pub irrational: Vec<(UnivariatePoly, usize)>,
}

pub(crate) fn directions(a: &Poly2, m: u32) -> Directions {
    let cone = a.tangent_cone(m);
    let mut rational = Vec::new();
    let mut irrational = Vec::new();
    for (p, k) in cone.squarefree_decomposition() {
        let roots = p.rational_roots();
        let mut rest = p.clone();
        for r in roots {
            rest = rest.exact_div(&UnivariatePoly::linear_root(&r));
            rational.push((ChartStep::Slope(r), k));
        }
        if rest.degree().unwrap_or(0) > 0 {
            irrational.push((rest, k));
        }
    }
    let vertical = m as usize - cone.degree().unwrap_or(0);
    if vertical > 0 {
        rational.push((ChartStep::Vertical, vertical));
    }
    Directions { rational, irrational }
}

/// Rational tangent directions shared by two germs, or an error when they
/// share a non-rational one.
pub(crate) fn common_directions(a: &Poly2, ma: u32, b: &Poly2, mb: u32) -> Result<Vec<ChartStep>> {
    let ta = a.tangent_cone(ma);
    let tb = b.tangent_cone(mb);
    let g = ta.gcd(&tb);
    let mut out = Vec::new();
    if g.degree().unwrap_or(0) > 0 {
        let roots = g.rational_roots();
        let sf = crate::exactalg::squarefree_part(&g)?;
        if roots.len() < sf.degree().unwrap_or(0) {
            return Err(Error::UnsupportedField("shared non-rational tangent direction".into()));
        }
        out.extend(roots.into_iter().map(ChartStep::Slope));
    }
    let va = ma as usize - ta.degree().unwrap_or(0);
    let vb = mb as usize - tb.degree().unwrap_or(0);
    if va > 0 && vb > 0 {
        out.push(ChartStep::Vertical);
    }
    Ok(out)
}

fn resolve(a: &Poly2, m: u32, path: Vec<ChartStep>) -> Result<ProfileNode> {
    if path.len() >= MAX_DEPTH {
        return Err(Error::DepthExceeded(MAX_DEPTH));
    }
    let dirs = directions(a, m);
    if dirs.irrational.iter().any(|(_, k)| *k >= 2) {
        return Err(Error::UnsupportedField("repeated non-rational tangent direction".into()));
    }
    let mut children = Vec::new();
    for (step, k) in dirs.rational {
        if k < 2 {
            continue;
        }
        let a1 = step.apply(a, m);
        let m1 = a1.multiplicity().unwrap_or(0);
        if m1 >= 2 {
            let mut p = path.clone();
            p.push(step);
            children.push(resolve(&a1, m1, p)?);
        }
    }
    Ok(ProfileNode { multiplicity: m, path, children })
}

/// Infinitely-near tree of a local germ at the origin.
pub fn resolve_germ(a: &Poly2) -> Result<ProfileNode> {
    match a.multiplicity() {
        None => Err(Error::ZeroPolynomial("germ")),
        Some(0) => Err(Error::NotOnCurve),
        Some(1) => Ok(ProfileNode { multiplicity: 1, path: Vec::new(), children: Vec::new() }),
        Some(m) => resolve(a, m, Vec::new()),
    }
}

/// Lowest-degree order of `f` at `p`: 0 off the curve, 1 at smooth points.
pub fn local_multiplicity(f: &HomogeneousForm, p: &ProjectivePoint) -> u32 {
    if f.is_zero() {
        return u32::MAX;
    }
    f.localize(p).multiplicity().unwrap_or(0)
}

/// Infinitely-near tree of a reduced curve at one of its points.
pub fn multiplicity_sequence(f: &HomogeneousForm, p: &ProjectivePoint) -> Result<ProfileNode> {
    if !super::points::is_reduced(f) {
        return Err(Error::NonReduced);
    }
    resolve_germ(&f.localize(p))
}

/// `Σ μ(μ−1)/2` of a tree.
pub fn delta_invariant(node: &ProfileNode) -> u64 {
    node.delta()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(terms: &[(u32, u32, i64)]) -> Vec<u32> {
        resolve_germ(&Poly2::from_int_terms(terms)).unwrap().multiplicities()
    }

    #[test]
    fn classical_germs() {
        // node y² − x² − x³
        assert_eq!(seq(&[(0, 2, 1), (2, 0, -1), (3, 0, -1)]), vec![2]);
        // cusp y² − x³
        assert_eq!(seq(&[(0, 2, 1), (3, 0, -1)]), vec![2]);
        // tacnode y² − x⁴
        assert_eq!(seq(&[(0, 2, 1), (4, 0, -1)]), vec![2, 2]);
        // rhamphoid cusp y² − x⁵
        assert_eq!(seq(&[(0, 2, 1), (5, 0, -1)]), vec![2, 2]);
        // ordinary triple point x³ − y³ + x⁴
        assert_eq!(seq(&[(3, 0, 1), (0, 3, -1), (4, 0, 1)]), vec![3]);
        // E6: y³ − x⁴
        assert_eq!(seq(&[(0, 3, 1), (4, 0, -1)]), vec![3]);
        // x² − y⁴ has a vertical tangent
        assert_eq!(seq(&[(2, 0, 1), (0, 4, -1)]), vec![2, 2]);
        // smooth
        assert_eq!(seq(&[(0, 1, 1), (2, 0, 1)]), vec![1]);
    }

    #[test]
    fn deltas() {
        let tac = resolve_germ(&Poly2::from_int_terms(&[(0, 2, 1), (4, 0, -1)])).unwrap();
        assert_eq!(delta_invariant(&tac), 2);
        let node = resolve_germ(&Poly2::from_int_terms(&[(0, 2, 1), (2, 0, -1), (3, 0, -1)])).unwrap();
        assert_eq!(delta_invariant(&node), 1);
        // D4 union of three lines: (y)(y−x)(y+x)
        let d4 = resolve_germ(&Poly2::from_int_terms(&[(0, 3, 1), (2, 1, -1)])).unwrap();
        assert_eq!(d4.delta(), 3);
        // two tangent cusps meeting: (y² − x³)(y² + x³) = y⁴ − x⁶
        let t = resolve_germ(&Poly2::from_int_terms(&[(0, 4, 1), (6, 0, -1)])).unwrap();
        assert_eq!(t.multiplicities(), vec![4, 2, 2]);
        assert_eq!(t.delta(), 8);
    }

    #[test]
    fn irrational_repeated_direction() {
        // (y² − 2x²)² + x⁵: doubled irrational tangent lines
        let a = Poly2::from_int_terms(&[(0, 4, 1), (2, 2, -4), (4, 0, 4), (5, 0, 1)]);
        assert!(matches!(resolve_germ(&a), Err(Error::UnsupportedField(_))));
    }

    #[test]
    fn non_reduced_germ_hits_depth() {
        let a = Poly2::from_int_terms(&[(0, 2, 1)]);
        assert_eq!(resolve_germ(&a).unwrap_err(), Error::DepthExceeded(MAX_DEPTH));
    }

    #[test]
    fn multiplicity_at_points() {
        let nodal = HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (3, 0, 0, -1), (2, 0, 1, -1)]);
        assert_eq!(local_multiplicity(&nodal, &ProjectivePoint::from_ints(0, 0, 1)), 2);
        assert_eq!(local_multiplicity(&nodal, &ProjectivePoint::from_ints(-1, 0, 1)), 1);
        assert_eq!(local_multiplicity(&nodal, &ProjectivePoint::from_ints(1, 0, 1)), 0);
        let conic = HomogeneousForm::from_int_terms(2, &[(2, 0, 0, 1), (0, 2, 0, 1), (0, 0, 2, -1)]);
        assert_eq!(local_multiplicity(&conic, &ProjectivePoint::from_ints(1, 0, 1)), 1);
        let double = &conic * &conic;
        assert_eq!(
            multiplicity_sequence(&double, &ProjectivePoint::from_ints(1, 0, 1)).unwrap_err(),
            Error::NonReduced
        );
    }
}
