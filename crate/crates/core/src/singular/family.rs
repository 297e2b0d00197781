use super::points::singularity_profile;
use super::resolve::{ProfileNode, MAX_DEPTH};
use crate::exactalg::{int, ratio, HomogeneousForm, Poly2, ProjectivePoint, Rational};
use crate::{Error, Result};

/// Required minimum multiplicities `δ_j` on the infinitely-near tree of a
/// singular point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakType {
    pub point: ProjectivePoint,
    pub tree: ProfileNode,
}

impl WeakType {
    /// The weak type given by the multiplicities of the tree itself.
    pub fn of_profile(point: ProjectivePoint, tree: &ProfileNode) -> Self {
        Self { point, tree: tree.clone() }
    }

    /// Entries `max(μ_j − 1, 0)`.
    pub fn reduced_by_one(point: ProjectivePoint, tree: &ProfileNode) -> Self {
        Self { point, tree: tree.map(&|n| n.multiplicity.saturating_sub(1)) }
    }

    pub fn from_values(point: ProjectivePoint, along: &ProfileNode, values: &[u32]) -> Result<Self> {
        let mut it = values.iter();
        let tree = along.map(&|_| 0);
        let mut filled = fill(&tree, &mut it)?;
        if it.next().is_some() {
            return Err(Error::TreeMismatch);
        }
        filled.path = along.path.clone();
        Ok(Self { point, tree: filled })
    }
}

fn fill<'a>(node: &ProfileNode, it: &mut impl Iterator<Item = &'a u32>) -> Result<ProfileNode> {
    let m = *it.next().ok_or(Error::TreeMismatch)?;
    let children = node.children.iter().map(|c| fill(c, it)).collect::<Result<Vec<_>>>()?;
    Ok(ProfileNode { multiplicity: m, path: node.path.clone(), children })
}

fn same_shape(a: &ProfileNode, b: &ProfileNode) -> bool {
    a.path == b.path
        && a.children.len() == b.children.len()
        && a.children.iter().zip(&b.children).all(|(x, y)| same_shape(x, y))
}

/// Whether `g` has the weak type `required` at its point: following the
/// charts of `along`, the pullback of `g` minus `δ_j` times each new
/// exceptional divisor stays effective.
pub fn weak_type_check(g: &HomogeneousForm, required: &WeakType, along: &ProfileNode) -> Result<bool> {
    if !same_shape(&required.tree, along) {
        return Err(Error::TreeMismatch);
    }
    if g.is_zero() {
        return Ok(true);
    }
    Ok(check_node(&g.localize(&required.point), &required.tree, 0))
}

fn check_node(b: &Poly2, req: &ProfileNode, depth: usize) -> bool {
    if depth > MAX_DEPTH {
        return false;
    }
    let delta = req.multiplicity;
    let mult = b.multiplicity().unwrap_or(u32::MAX);
    if mult < delta {
        return false;
    }
    req.children.iter().all(|child| {
        let step = child.path.last().expect("child nodes carry a chart");
        check_node(&step.apply(b, delta), child, depth + 1)
    })
}

/// `f_t = Σ t^i F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveFamily {
    pub coeffs: Vec<HomogeneousForm>,
    pub t0: Rational,
}

impl CurveFamily {
    pub fn new(coeffs: Vec<HomogeneousForm>, t0: Rational) -> Result<Self> {
        let Some(first) = coeffs.first() else {
            return Err(Error::Domain("empty family".into()));
        };
        if coeffs.iter().any(|c| c.degree() != first.degree()) {
            return Err(Error::Degree("family members must share a degree".into()));
        }
        Ok(Self { coeffs, t0 })
    }

    pub fn at(&self, t: &Rational) -> HomogeneousForm {
        let mut out = HomogeneousForm::zero(self.coeffs[0].degree());
        let mut tp = int(1);
        for c in &self.coeffs {
            out = &out + &c.scale(&tp);
            tp *= t;
        }
        out
    }

    /// `∂f_t/∂t` at `t`.
    pub fn derivative_at(&self, t: &Rational) -> HomogeneousForm {
        let mut out = HomogeneousForm::zero(self.coeffs[0].degree());
        let mut tp = int(1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out = &out + &c.scale(&(int(i as i64) * &tp));
            tp *= t;
        }
        out
    }
}

/// Outcome of the derivative check at each singular point of `f_{t0}`.
#[derive(Clone, Debug)]
pub struct FamilyCheck {
    pub derivative: HomogeneousForm,
    pub points: Vec<(ProjectivePoint, bool)>,
}

impl FamilyCheck {
    pub fn holds(&self) -> bool {
        self.points.iter().all(|(_, ok)| *ok)
    }
}

/// For a family that is equisingular at `samples` parameters around `t0`
/// (same sorted tree shapes), checks that `∂f/∂t` at `t0` has weak type
/// `μ − 1` at every singular point of `f_{t0}`.
pub fn family_derivative_check(fam: &CurveFamily, samples: usize) -> Result<FamilyCheck> {
    let f0 = fam.at(&fam.t0);
    let d = fam.derivative_at(&fam.t0);
    if d.is_zero() {
        return Err(Error::DegenerateFamily("derivative vanishes identically".into()));
    }
    if d.proportionality(&f0).is_some() {
        return Err(Error::DegenerateFamily("derivative is proportional to the member".into()));
    }
    let profile = singularity_profile(&f0)?;
    let shapes = profile.shapes();
    for j in 1..=samples as i64 {
        let step = ratio((j + 1) / 2, 64);
        let t = if j % 2 == 1 { &fam.t0 + &step } else { &fam.t0 - &step };
        if singularity_profile(&fam.at(&t))?.shapes() != shapes {
            return Err(Error::NotEquisingular);
        }
    }
    let mut points = Vec::new();
    for (p, tree) in &profile.points {
        let req = WeakType::reduced_by_one(p.clone(), tree);
        points.push((p.clone(), weak_type_check(&d, &req, tree)?));
    }
    Ok(FamilyCheck { derivative: d, points })
}
