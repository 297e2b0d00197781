//! Named test curves and the curve-file format.
//!
//! A curve file is a form in the usual wire format plus optional claims:
//!
//! ```json
//! {"name": "kubert9", "degree": 3, "coeffs": [[0,2,1,"1/1"], ...],
//!  "flexes": [["0/1","1/1","0/1"]],
//!  "torsion": [{"point": ["0/1","0/1","1/1"], "order": "9"}]}
//! ```
//!
//! Claims are re-verified on load: flexes by normalizing there, torsion
//! orders with the group law whose origin is the first claimed flex.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cubic::{long_weierstrass, normal_form, normalize_at_flex, point_order, weierstrass_any_flex};
use crate::exactalg::{int, parse_rational, ratio, FormJson, HomogeneousForm, ProjectivePoint};
use crate::singular::CurveFamily;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionClaim {
    pub point: [String; 3],
    pub order: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(flatten)]
    pub form: FormJson,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub flexes: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub torsion: Vec<TorsionClaim>,
}

/// A curve whose file claims have been checked.
#[derive(Clone, Debug)]
pub struct Curve {
    pub name: String,
    pub form: HomogeneousForm,
    pub flexes: Vec<ProjectivePoint>,
    pub torsion: Vec<(ProjectivePoint, u64)>,
}

fn parse_point(c: &[String; 3]) -> Result<ProjectivePoint> {
    ProjectivePoint::new([parse_rational(&c[0])?, parse_rational(&c[1])?, parse_rational(&c[2])?])
}

impl CurveFile {
    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Malformed(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Curve> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Malformed(format!("{}: {e}", path.display())))?;
        Self::parse(&text)?.verify()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Parses the form and re-checks every claim.
    pub fn verify(&self) -> Result<Curve> {
        let form = HomogeneousForm::from_json(&self.form)?;
        let name = self.name.clone().unwrap_or_else(|| "curve".into());
        let mut flexes = Vec::new();
        for c in &self.flexes {
            let p = parse_point(c)?;
            normalize_at_flex(&form, &p)
                .map_err(|e| Error::Fixture(format!("{name}: claimed flex {p}: {e}")))?;
            flexes.push(p);
        }
        let mut torsion = Vec::new();
        if !self.torsion.is_empty() {
            let w = match flexes.first() {
                Some(o) => crate::cubic::weierstrass_at_flex(&form, o),
                None => weierstrass_any_flex(&form),
            }
            .map_err(|e| Error::Fixture(format!("{name}: no group origin: {e}")))?;
            for claim in &self.torsion {
                let p = parse_point(&claim.point)?;
                let n: u64 = claim
                    .order
                    .parse()
                    .map_err(|_| Error::Malformed(format!("order {:?}", claim.order)))?;
                let a = w
                    .to_affine(&p)
                    .map_err(|e| Error::Fixture(format!("{name}: torsion point {p}: {e}")))?;
                let found = point_order(&w, &a, n.max(1))?;
                if found != Some(n) {
                    return Err(Error::Fixture(format!(
                        "{name}: {p} claimed order {n}, found {found:?}"
                    )));
                }
                torsion.push((p, n));
            }
        }
        Ok(Curve { name, form, flexes, torsion })
    }
}

impl Curve {
    pub fn to_file(&self) -> CurveFile {
        CurveFile {
            name: Some(self.name.clone()),
            form: self.form.to_json(),
            flexes: self.flexes.iter().map(|p| p.to_strings()).collect(),
            torsion: self
                .torsion
                .iter()
                .map(|(p, n)| TorsionClaim { point: p.to_strings(), order: n.to_string() })
                .collect(),
        }
    }
}

fn curve(name: &str, form: HomogeneousForm, flexes: &[(i64, i64, i64)], torsion: &[((i64, i64, i64), u64)]) -> Curve {
    Curve {
        name: name.into(),
        form,
        flexes: flexes.iter().map(|&(a, b, c)| ProjectivePoint::from_ints(a, b, c)).collect(),
        torsion: torsion
            .iter()
            .map(|&((a, b, c), n)| (ProjectivePoint::from_ints(a, b, c), n))
            .collect(),
    }
}

/// `X0³ + X1³ + X2³`.
pub fn fermat() -> HomogeneousForm {
    HomogeneousForm::from_int_terms(3, &[(3, 0, 0, 1), (0, 3, 0, 1), (0, 0, 3, 1)])
}

/// `X1²X2 − X0²(X0 + X2)`, node at `(0:0:1)`.
pub fn nodal_cubic() -> HomogeneousForm {
    HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (3, 0, 0, -1), (2, 0, 1, -1)])
}

/// `X1²X2 − X0³`, cusp at `(0:0:1)`.
pub fn cuspidal_cubic() -> HomogeneousForm {
    HomogeneousForm::from_int_terms(3, &[(0, 2, 1, 1), (3, 0, 0, -1)])
}

/// `X0²X1² + X1²X2² + X2²X0² − 2X0X1X2(X0 + X1 + X2)`, cusps at the
/// coordinate points.
pub fn tricuspidal_quartic() -> HomogeneousForm {
    HomogeneousForm::from_int_terms(
        4,
        &[(2, 2, 0, 1), (0, 2, 2, 1), (2, 0, 2, 1), (2, 1, 1, -2), (1, 2, 1, -2), (1, 1, 2, -2)],
    )
}

/// `y² = 4x³ − 4x`, j = 1728.
pub fn weierstrass_square() -> HomogeneousForm {
    normal_form(&int(-4), &int(0))
}

/// `y² = 4x³ − 3x`, j = 1728, singular members of the flex pencil at
/// rational parameters.
pub fn weierstrass_rational_nodes() -> HomogeneousForm {
    normal_form(&int(-3), &int(0))
}

/// `y² = 4x³ − 1/4`, j = 0.
pub fn weierstrass_j0() -> HomogeneousForm {
    normal_form(&int(0), &ratio(-1, 4))
}

/// Curve with a rational point of order 9 at `(0:0:1)`, from the
/// parametrization `b = cd, c = fd − f, d = f(f − 1) + 1` at `f = 2`:
/// `y² − 3xy − 12y = x³ − 12x²`.
pub fn kubert9() -> HomogeneousForm {
    long_weierstrass([int(-3), int(-12), int(-12), int(0), int(0)])
}

/// Curve with a rational point of order 6 at `(0:0:1)`, from
/// `y² + (1 − c)xy − by = x³ − bx²` with `b = c + c²`, `c = 1`:
/// `y² − 2y = x³ − 2x²`.
pub fn kubert6() -> HomogeneousForm {
    long_weierstrass([int(0), int(-2), int(-2), int(0), int(0)])
}

/// `X1²X2 − (X0 − tX2)²(X0 + X2)` at `t = 0`: a node moving along `X1 = 0`.
pub fn moving_node_family() -> CurveFamily {
    let f0 = nodal_cubic();
    let f1 = HomogeneousForm::from_int_terms(3, &[(2, 0, 1, 2), (1, 0, 2, 2)]);
    let f2 = HomogeneousForm::from_int_terms(3, &[(1, 0, 2, -1), (0, 0, 3, -1)]);
    CurveFamily::new(vec![f0, f1, f2], int(0)).expect("cubic family")
}

/// `X1²X2 − (X0 − tX2)³` at `t = 0`: a translated cusp.
pub fn moving_cusp_family() -> CurveFamily {
    let f0 = cuspidal_cubic();
    let f1 = HomogeneousForm::from_int_terms(3, &[(2, 0, 1, 3)]);
    let f2 = HomogeneousForm::from_int_terms(3, &[(1, 0, 2, -3)]);
    let f3 = HomogeneousForm::from_int_terms(3, &[(0, 0, 3, 1)]);
    CurveFamily::new(vec![f0, f1, f2, f3], int(0)).expect("cubic family")
}

/// Smooth cubics of the corpus with their certified claims.
pub fn smooth_cubics() -> Vec<Curve> {
    vec![
        curve("fermat", fermat(), &[(1, -1, 0), (1, 0, -1), (0, 1, -1)], &[]),
        curve("weierstrass-square", weierstrass_square(), &[(0, 0, 1)], &[((1, 0, 0), 2)]),
        curve("weierstrass-rational-nodes", weierstrass_rational_nodes(), &[(0, 0, 1)], &[]),
        curve("weierstrass-j0", weierstrass_j0(), &[(0, 0, 1)], &[]),
        curve("kubert9", kubert9(), &[(0, 1, 0)], &[((0, 0, 1), 9)]),
        curve("kubert6", kubert6(), &[(0, 1, 0)], &[((0, 0, 1), 6)]),
    ]
}

/// Singular curves of the corpus.
pub fn singular_curves() -> Vec<Curve> {
    vec![
        curve("nodal-cubic", nodal_cubic(), &[], &[]),
        curve("cuspidal-cubic", cuspidal_cubic(), &[], &[]),
        curve("tricuspidal-quartic", tricuspidal_quartic(), &[], &[]),
    ]
}

pub fn all_curves() -> Vec<Curve> {
    let mut v = smooth_cubics();
    v.extend(singular_curves());
    v
}

pub fn by_name(name: &str) -> Option<Curve> {
    all_curves().into_iter().find(|c| c.name == name)
}
