//! Contact linear systems on a smooth cubic and pencils of cubics.
//!
//! `Γ_P^k` is the space of degree-`k` forms whose restriction to `C` vanishes
//! to order `3k` at `P`. For `k = 3` and a contact point it is a pencil
//! `s1·g + s2·F`; its discriminant is a binary form of degree 12 whose roots
//! are the singular members.

use std::fmt;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::cubic::{cubic_discriminant, hessian, is_smooth_cubic, j_invariant, WeierstrassData};
use crate::exactalg::{
    format_rational, int, kernel, rank, BinaryForm, BinaryRoot, HomogeneousForm, Poly2,
    ProjectivePoint, Rational, UnivariatePoly,
};
use crate::singular::{
    germ_intersection, is_reduced, local_multiplicity, multiplicity_sequence, singular_points,
};
use crate::torsion::primitive_contact_count;
use crate::{Error, Result};

/// Basis of `Γ_P^k`, including the multiples of `F` when `k ≥ 3`.
#[derive(Clone, Debug)]
pub struct ContactSystem {
    pub k: u32,
    pub point: ProjectivePoint,
    pub curve: HomogeneousForm,
    pub basis: Vec<HomogeneousForm>,
}

impl ContactSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of `F·H^0(O(k−3))`.
    pub fn multiple_dimension(&self) -> usize {
        if self.k < 3 {
            0
        } else {
            let k = self.k as usize;
            (k - 1) * (k - 2) / 2
        }
    }

    /// Whether `(3k)P` is cut out by a degree-`k` curve not containing `C`.
    pub fn is_contact(&self) -> bool {
        self.dimension() == self.multiple_dimension() + 1
    }

    pub fn contains(&self, g: &HomogeneousForm) -> bool {
        if g.degree() != self.k {
            return false;
        }
        let mons = HomogeneousForm::monomials(self.k);
        let row = |f: &HomogeneousForm| mons.iter().map(|e| f.coeff(*e)).collect::<Vec<_>>();
        let mut rows: Vec<Vec<Rational>> = self.basis.iter().map(row).collect();
        rows.push(row(g));
        rank(&rows) == self.basis.len()
    }
}

fn require_smooth_point(c: &HomogeneousForm, p: &ProjectivePoint) -> Result<()> {
    if !c.vanishes_at(p) {
        return Err(Error::NotOnCurve);
    }
    if c.gradient_at(p).iter().all(Zero::is_zero) {
        return Err(Error::SingularCurve(format!("{p} is a singular point")));
    }
    Ok(())
}

/// Solves the `3k` linear conditions of vanishing along the branch of `C`
/// at `P` on the space of degree-`k` forms.
pub fn contact_system(c: &HomogeneousForm, p: &ProjectivePoint, k: u32) -> Result<ContactSystem> {
    if k == 0 {
        return Err(Error::Domain("contact degree must be positive".into()));
    }
    require_smooth_point(c, p)?;
    let len = 3 * k as usize;
    let branch = c.localize(p).smooth_branch(len);
    let mons = HomogeneousForm::monomials(k);
    let cols: Vec<Vec<Rational>> = mons
        .iter()
        .map(|e| HomogeneousForm::monomial(*e, int(1)).localize(p).series_along(&branch, len))
        .collect();
    let rows: Vec<Vec<Rational>> =
        (0..len).map(|i| cols.iter().map(|col| col[i].clone()).collect()).collect();
    let basis = kernel(&rows, mons.len())
        .into_iter()
        .map(|v| {
            HomogeneousForm::from_terms(k, mons.iter().copied().zip(v))
                .expect("monomials of degree k")
        })
        .collect();
    Ok(ContactSystem { k, point: p.clone(), curve: c.clone(), basis })
}

/// The pencil `s1·g + s2·F` of cubics with 9-fold contact at `point`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    pub curve: HomogeneousForm,
    pub g: HomogeneousForm,
    pub point: ProjectivePoint,
}

fn normalize_leading(f: &HomogeneousForm) -> HomogeneousForm {
    match f.terms().next() {
        Some((_, c)) => f.scale(&(Rational::one() / c)),
        None => f.clone(),
    }
}

fn is_flex(c: &HomogeneousForm, p: &ProjectivePoint) -> Result<bool> {
    Ok(hessian(c)?.vanishes_at(p))
}

impl Pencil {
    pub fn new(curve: HomogeneousForm, g: HomogeneousForm, point: ProjectivePoint) -> Result<Self> {
        if curve.degree() != 3 || g.degree() != 3 {
            return Err(Error::Degree("pencil generators must be cubics".into()));
        }
        if g.is_zero() || g.proportionality(&curve).is_some() {
            return Err(Error::Precondition("pencil generators are dependent".into()));
        }
        Ok(Self { curve, g, point })
    }

    /// `Γ_P^3` as a pencil. At a flex the second generator is the cube of
    /// the inflection tangent; otherwise it is the basis element with the
    /// leading monomial of `F` removed.
    pub fn contact(curve: &HomogeneousForm, p: &ProjectivePoint) -> Result<Self> {
        let sys = contact_system(curve, p, 3)?;
        if !sys.is_contact() {
            return Err(Error::Precondition(format!(
                "{p} is not a 9-fold contact point (dimension {})",
                sys.dimension()
            )));
        }
        let g = if is_flex(curve, p)? {
            let grad = curve.gradient_at(p);
            normalize_leading(&HomogeneousForm::linear(&grad).pow(3))
        } else {
            let (e, fe) = curve.terms().next().map(|(e, c)| (*e, c.clone())).expect("nonzero");
            let v = sys
                .basis
                .iter()
                .find(|b| b.proportionality(curve).is_none())
                .ok_or_else(|| Error::Internal("pencil without a second generator".into()))?;
            normalize_leading(&(v - &curve.scale(&(v.coeff(e) / fe))))
        };
        Self::new(curve.clone(), g, p.clone())
    }

    pub fn member(&self, root: &BinaryRoot) -> HomogeneousForm {
        let (s1, s2) = root.coords();
        &self.g.scale(&s1) + &self.curve.scale(&s2)
    }
}

/// Binary form of degree 12 in `(s1 : s2)`, interpolated from the cubic
/// discriminant of the members `(s : 1)`.
pub fn pencil_discriminant(pen: &Pencil) -> Result<BinaryForm> {
    let d = BinaryForm::from_samples(12, |s| {
        cubic_discriminant(&pen.member(&BinaryRoot::Finite(s.clone())))
    })?;
    if d.is_zero() {
        return Err(Error::DegeneratePencil);
    }
    Ok(d)
}

/// The member singular at the contact point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularMember {
    pub parameter: BinaryRoot,
    /// `P` is a flex and the member is the triple inflection tangent.
    pub at_flex: bool,
}

pub fn member_singular_at(pen: &Pencil) -> Result<SingularMember> {
    let p = &pen.point;
    require_smooth_point(&pen.curve, p)?;
    let gf = pen.curve.gradient_at(p);
    let gg = pen.g.gradient_at(p);
    let i = gf.iter().position(|x| !x.is_zero()).expect("smooth point");
    let c = &gg[i] / &gf[i];
    if (0..3).any(|j| gg[j] != &c * &gf[j]) {
        return Err(Error::Precondition("gradients at the contact point are not proportional".into()));
    }
    let parameter = BinaryRoot::from_coords(&int(1), &-c)?;
    debug_assert!(pen.member(&parameter).gradient_at(p).iter().all(Zero::is_zero));
    Ok(SingularMember { parameter, at_flex: is_flex(&pen.curve, p)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MemberKind {
    Node,
    Cusp,
    NonReduced,
    /// Several singular points, or a worse singularity than a cusp.
    Other,
    /// Singular point not defined over the rationals.
    Unresolved,
}

impl MemberKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Node => "node",
            Self::Cusp => "cusp",
            Self::NonReduced => "non-reduced",
            Self::Other => "other",
            Self::Unresolved => "unresolved",
        }
    }
}

impl fmt::Display for MemberKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tangent line of a double point with a repeated tangent, from the
/// quadratic part `a x² + b xy + c y²`.
fn double_tangent(a: &Poly2) -> Option<Poly2> {
    let (q20, q11, q02) = (a.coeff(2, 0), a.coeff(1, 1), a.coeff(0, 2));
    if &q11 * &q11 != int(4) * &q20 * &q02 {
        return None;
    }
    Some(if q20.is_zero() {
        Poly2::from_int_terms(&[(0, 1, 1)])
    } else {
        Poly2::from_terms(&[((1, 0), int(1)), ((0, 1), &q11 / (int(2) * &q20))])
    })
}

/// Kind of a singular point of a reduced curve.
pub fn classify_point(f: &HomogeneousForm, p: &ProjectivePoint) -> Result<MemberKind> {
    if local_multiplicity(f, p) != 2 {
        return Ok(MemberKind::Other);
    }
    let a = f.localize(p);
    let Some(line) = double_tangent(&a) else {
        return Ok(MemberKind::Node);
    };
    let tree = multiplicity_sequence(f, p)?;
    // transform smooth and tangent to E: the tangent meets the germ with order 3
    let contact = germ_intersection(&a, &line, f.degree() as usize)?;
    Ok(if tree.multiplicities() == [2] && contact == 3 { MemberKind::Cusp } else { MemberKind::Other })
}

/// Node, cusp or non-reduced for a singular member with rational singular
/// locus.
pub fn classify_singular_member(f: &HomogeneousForm) -> Result<MemberKind> {
    if !is_reduced(f) {
        return Ok(MemberKind::NonReduced);
    }
    let pts = match singular_points(f) {
        Ok(p) => p,
        Err(Error::UnsupportedField(_)) => return Ok(MemberKind::Unresolved),
        Err(e) => return Err(e),
    };
    match pts.as_slice() {
        [] => Err(Error::Precondition("member is smooth".into())),
        [p] => classify_point(f, p),
        _ => Ok(MemberKind::Other),
    }
}

/// Where a discriminant root lives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootData {
    Rational(BinaryRoot),
    /// `count` conjugate roots of `factor`, none rational.
    Conjugates { factor: UnivariatePoly, count: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootEntry {
    pub root: RootData,
    pub multiplicity: usize,
    pub kind: MemberKind,
}

impl RootEntry {
    pub fn count(&self) -> usize {
        match &self.root {
            RootData::Rational(_) => 1,
            RootData::Conjugates { count, .. } => *count,
        }
    }
}

/// Singular members of a pencil.
#[derive(Clone, Debug)]
pub struct SingularMemberReport {
    pub discriminant: BinaryForm,
    pub roots: Vec<RootEntry>,
}

impl SingularMemberReport {
    /// Sum of root multiplicities over the complex numbers.
    pub fn total_multiplicity(&self) -> usize {
        self.roots.iter().map(|r| r.count() * r.multiplicity).sum()
    }

    pub fn distinct_members(&self) -> usize {
        self.roots.iter().map(RootEntry::count).sum()
    }

    /// Multiplicities of all distinct roots, largest first.
    pub fn multiplicity_pattern(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .roots
            .iter()
            .flat_map(|r| std::iter::repeat(r.multiplicity).take(r.count()))
            .collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    pub fn multiplicity_of(&self, root: &BinaryRoot) -> usize {
        self.discriminant.multiplicity_of(root)
    }

    pub fn to_json(&self) -> Value {
        let roots: Vec<Value> = self
            .roots
            .iter()
            .map(|r| {
                let root = match &r.root {
                    RootData::Rational(b) => {
                        let (s1, s2) = b.coords();
                        json!({"s1": format_rational(&s1), "s2": format_rational(&s2)})
                    }
                    RootData::Conjugates { factor, count } => json!({
                        "conjugates": count.to_string(),
                        "factor": factor.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
                    }),
                };
                json!({
                    "root": root,
                    "multiplicity": r.multiplicity.to_string(),
                    "kind": r.kind.as_str(),
                })
            })
            .collect();
        json!({
            "degree": self.discriminant.degree.to_string(),
            "total_multiplicity": self.total_multiplicity().to_string(),
            "pattern": self.multiplicity_pattern().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "roots": roots,
        })
    }
}

/// Discriminant roots with a classification of each member. Members at
/// irrational simple roots are nodal; irrational multiple roots are left
/// unresolved.
pub fn singular_members(pen: &Pencil) -> Result<SingularMemberReport> {
    let disc = pencil_discriminant(pen)?;
    let mut roots = Vec::new();
    for (root, m) in disc.rational_roots() {
        let kind = classify_singular_member(&pen.member(&root))?;
        roots.push(RootEntry { root: RootData::Rational(root), multiplicity: m, kind });
    }
    for (factor, m) in disc.affine.squarefree_decomposition() {
        let mut rest = factor.clone();
        for r in factor.rational_roots() {
            rest = rest.exact_div(&UnivariatePoly::linear_root(&r));
        }
        let count = rest.degree().unwrap_or(0);
        if count > 0 {
            let kind = if m == 1 { MemberKind::Node } else { MemberKind::Unresolved };
            roots.push(RootEntry {
                root: RootData::Conjugates { factor: rest.monic(), count },
                multiplicity: m,
                kind,
            });
        }
    }
    Ok(SingularMemberReport { discriminant: disc, roots })
}

/// Singular members of the flex pencil `s·X0³ + F` of a normal form.
#[derive(Clone, Debug)]
pub struct FlexPencilCount {
    /// Distinct reduced singular members.
    pub count: usize,
    pub kinds: Vec<MemberKind>,
    /// Discriminant multiplicity at the triple line `X0³`.
    pub triple_line_multiplicity: usize,
    pub report: SingularMemberReport,
}

pub fn flex_pencil(w: &WeierstrassData) -> Result<Pencil> {
    Pencil::new(
        w.normal_form(),
        HomogeneousForm::monomial([3, 0, 0], int(1)),
        ProjectivePoint::from_ints(0, 0, 1),
    )
}

pub fn flex_pencil_count(w: &WeierstrassData) -> Result<FlexPencilCount> {
    if !w.is_smooth() {
        return Err(Error::SingularCurve("normal form has zero discriminant".into()));
    }
    let report = singular_members(&flex_pencil(w)?)?;
    let mut kinds = Vec::new();
    let mut triple_line_multiplicity = 0;
    for r in &report.roots {
        if r.kind == MemberKind::NonReduced {
            triple_line_multiplicity = r.multiplicity;
            continue;
        }
        kinds.extend(std::iter::repeat(r.kind).take(r.count()));
    }
    kinds.sort();
    Ok(FlexPencilCount { count: kinds.len(), kinds, triple_line_multiplicity, report })
}

/// Discriminant accounting for the pencil at a primitive level-3 point.
#[derive(Clone, Debug)]
pub struct FiberAccounting {
    pub pencil: Pencil,
    pub singular_member: SingularMember,
    /// Kind of the member singular at `P`, at `P`.
    pub kind_at_point: MemberKind,
    pub report: SingularMemberReport,
}

impl FiberAccounting {
    /// Multiplicity of the discriminant at the member singular at `P`.
    pub fn multiplicity_at_member(&self) -> usize {
        self.report.multiplicity_of(&self.singular_member.parameter)
    }

    /// Every singular member other than the one at `P` is nodal, and so is
    /// that one at `P`.
    pub fn all_nodal(&self) -> bool {
        self.kind_at_point == MemberKind::Node
            && self.report.roots.iter().all(|r| {
                r.kind == MemberKind::Node
                    || r.root == RootData::Rational(self.singular_member.parameter.clone())
            })
    }

    /// Singular members other than the one singular at `P`.
    pub fn other_members(&self) -> usize {
        self.report.distinct_members() - 1
    }
}

pub fn nonflex_fiber_accounting(c: &HomogeneousForm, p: &ProjectivePoint) -> Result<FiberAccounting> {
    if !is_smooth_cubic(c)? {
        return Err(Error::SingularCurve("curve has zero discriminant".into()));
    }
    require_smooth_point(c, p)?;
    if is_flex(c, p)? {
        return Err(Error::Precondition(format!("{p} is a flex")));
    }
    if contact_system(c, p, 2)?.is_contact() {
        return Err(Error::Precondition(format!("{p} already has 6-fold contact")));
    }
    let pencil = Pencil::contact(c, p)?;
    let singular_member = member_singular_at(&pencil)?;
    let kind_at_point = classify_point(&pencil.member(&singular_member.parameter), p)?;
    let report = singular_members(&pencil)?;
    Ok(FiberAccounting { pencil, singular_member, kind_at_point, report })
}

/// Rational unisecant cubics: 9 flexes times the singular members of each
/// flex pencil, plus 4 for each of the 72 primitive level-3 points.
#[derive(Clone, Debug)]
pub struct UnisecantCount {
    pub j: Rational,
    pub flex_pencil: usize,
    pub total: u64,
}

pub const NODAL_MEMBERS_PER_POINT: u64 = 4;

pub fn unisecant_count_k3(c: &HomogeneousForm) -> Result<UnisecantCount> {
    if !is_smooth_cubic(c)? {
        return Err(Error::SingularCurve("curve has zero discriminant".into()));
    }
    let w = crate::cubic::weierstrass_any_flex(c)?;
    unisecant_count_weierstrass(&w)
}

pub fn unisecant_count_weierstrass(w: &WeierstrassData) -> Result<UnisecantCount> {
    let flex = flex_pencil_count(w)?;
    let total = 9 * flex.count as u64 + NODAL_MEMBERS_PER_POINT * primitive_contact_count(3)?;
    Ok(UnisecantCount { j: j_invariant(w)?, flex_pencil: flex.count, total })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicKind {
    IrreducibleConic,
    LinePair,
    DoubleLine,
}

impl ConicKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::IrreducibleConic => "irreducible-conic",
            Self::LinePair => "line-pair",
            Self::DoubleLine => "double-line",
        }
    }
}

/// Symmetric matrix of a conic.
pub fn conic_matrix(q: &HomogeneousForm) -> Vec<Vec<Rational>> {
    let mut m = vec![vec![Rational::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut e = [0u32; 3];
            e[i] += 1;
            e[j] += 1;
            let c = q.coeff(e);
            m[i][j] = if i == j { c } else { c / int(2) };
        }
    }
    m
}

/// The conic with 6-fold contact at `P` and its type.
pub fn contact_conic_check(c: &HomogeneousForm, p: &ProjectivePoint) -> Result<(ConicKind, HomogeneousForm)> {
    let sys = contact_system(c, p, 2)?;
    match sys.dimension() {
        0 => Err(Error::Precondition(format!("{p} has no conic with 6-fold contact"))),
        1 => {
            let q = normalize_leading(&sys.basis[0]);
            let kind = match rank(&conic_matrix(&q)) {
                3 => ConicKind::IrreducibleConic,
                2 => ConicKind::LinePair,
                _ => ConicKind::DoubleLine,
            };
            Ok((kind, q))
        }
        d => Err(Error::Internal(format!("contact conic system of dimension {d}"))),
    }
}
