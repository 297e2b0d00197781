use super::resolve::{common_directions, multiplicity_sequence, MAX_DEPTH};
use crate::exactalg::{common_zeros, HomogeneousForm, Poly2, ProjectivePoint};
use crate::{Error, Result};

/// Intersection multiplicity at the origin of two germs, by
/// `I(a, b) = m_a·m_b + Σ I(a', b')` over shared tangent directions, ending
/// with the order of one germ along the smooth branch of the other.
///
/// `bound` caps the series length; exceeding it means a shared component.
pub fn germ_intersection(a: &Poly2, b: &Poly2, bound: usize) -> Result<usize> {
    germ_rec(a, b, bound, 0)
}

fn germ_rec(a: &Poly2, b: &Poly2, bound: usize, depth: usize) -> Result<usize> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthExceeded(MAX_DEPTH));
    }
    let (Some(ma), Some(mb)) = (a.multiplicity(), b.multiplicity()) else {
        return Err(Error::CommonComponent);
    };
    if ma == 0 || mb == 0 {
        return Ok(0);
    }
    if ma == 1 || mb == 1 {
        let (smooth, other) = if ma == 1 { (a, b) } else { (b, a) };
        let branch = smooth.smooth_branch(bound + 1);
        return other.order_along(&branch, bound + 1).ok_or(Error::CommonComponent);
    }
    let mut total = (ma * mb) as usize;
    for step in common_directions(a, ma, b, mb)? {
        total += germ_rec(&step.apply(a, ma), &step.apply(b, mb), bound, depth + 1)?;
    }
    Ok(total)
}

/// Local intersection number at `p` via the blow-up recursion.
pub fn local_intersection_blowup(
    f: &HomogeneousForm,
    g: &HomogeneousForm,
    p: &ProjectivePoint,
) -> Result<usize> {
    let bound = (f.degree() * g.degree()) as usize;
    germ_intersection(&f.localize(p), &g.localize(p), bound)
}

/// Local intersection number at `p` read off the eliminant in coordinates
/// where the projection separates the intersection points.
pub fn local_intersection_resultant(
    f: &HomogeneousForm,
    g: &HomogeneousForm,
    p: &ProjectivePoint,
) -> Result<usize> {
    if !f.vanishes_at(p) || !g.vanishes_at(p) {
        return Ok(0);
    }
    Ok(common_zeros(f, g)?.multiplicity_at(p))
}

/// Intersection multiplicity at `p`, computed by elimination and checked
/// against the blow-up recursion.
pub fn local_intersection(f: &HomogeneousForm, g: &HomogeneousForm, p: &ProjectivePoint) -> Result<usize> {
    let r = local_intersection_resultant(f, g, p)?;
    let b = local_intersection_blowup(f, g, p)?;
    if r != b {
        return Err(Error::Internal(format!("intersection at {p}: eliminant {r}, blow-up {b}")));
    }
    Ok(r)
}

/// All intersection points with local multiplicities from the blow-up
/// recursion, and the multiplicity carried by non-rational points.
#[derive(Clone, Debug)]
pub struct Intersection {
    pub points: Vec<(ProjectivePoint, usize)>,
    pub irrational_multiplicity: usize,
}

impl Intersection {
    pub fn total(&self) -> usize {
        self.points.iter().map(|(_, m)| m).sum::<usize>() + self.irrational_multiplicity
    }
}

pub fn intersect(f: &HomogeneousForm, g: &HomogeneousForm) -> Result<Intersection> {
    let z = common_zeros(f, g)?;
    let mut points = Vec::with_capacity(z.points.len());
    for (p, m) in &z.points {
        let b = local_intersection_blowup(f, g, p)?;
        if b != *m {
            return Err(Error::Internal(format!("intersection at {p}: eliminant {m}, blow-up {b}")));
        }
        points.push((p.clone(), b));
    }
    Ok(Intersection { points, irrational_multiplicity: z.irrational_multiplicity })
}

/// Both sides of `D·F = D̃·F̃ + Σ μ·δ`, with `δ` the multiplicities of the
/// transforms of `F` at the infinitely near points of `D`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySides {
    pub lhs: usize,
    pub transform_term: usize,
    pub mu_delta: usize,
}

impl IdentitySides {
    pub fn rhs(&self) -> usize {
        self.transform_term + self.mu_delta
    }

    pub fn holds(&self) -> bool {
        self.lhs == self.rhs()
    }
}

/// Walks the tree of `a` carrying `b` along: returns the intersection of
/// the strict transforms beyond the tree and `Σ μ·δ` over its nodes.
fn split_at_tree(a: &Poly2, b: &Poly2, bound: usize, depth: usize) -> Result<(usize, usize)> {
    if depth > MAX_DEPTH {
        return Err(Error::DepthExceeded(MAX_DEPTH));
    }
    let ma = a.multiplicity().ok_or(Error::CommonComponent)?;
    let mb = b.multiplicity().ok_or(Error::CommonComponent)?;
    if ma <= 1 || mb == 0 {
        return Ok((germ_intersection(a, b, bound)?, 0));
    }
    let mut transform = 0;
    let mut mu_delta = (ma * mb) as usize;
    for step in common_directions(a, ma, b, mb)? {
        let (t, md) = split_at_tree(&step.apply(a, ma), &step.apply(b, mb), bound, depth + 1)?;
        transform += t;
        mu_delta += md;
    }
    Ok((transform, mu_delta))
}

/// Global intersection `lhs` (Bezout total from elimination) against the
/// strict-transform term plus `Σ μ·δ` over the singular points of `f`.
pub fn blowup_intersection_identity(f: &HomogeneousForm, g: &HomogeneousForm) -> Result<IdentitySides> {
    let z = common_zeros(f, g)?;
    let bound = (f.degree() * g.degree()) as usize;
    let mut transform_term = z.irrational_multiplicity;
    let mut mu_delta = 0;
    for (p, _) in &z.points {
        let (t, md) = split_at_tree(&f.localize(p), &g.localize(p), bound, 0)?;
        transform_term += t;
        mu_delta += md;
    }
    Ok(IdentitySides { lhs: z.total_multiplicity(), transform_term, mu_delta })
}

/// `δ` values of `g` along the tree of `f` at `p`: multiplicities of the
/// strict transforms of `g` replayed along the same charts.
pub fn transform_multiplicities(
    f: &HomogeneousForm,
    g: &HomogeneousForm,
    p: &ProjectivePoint,
) -> Result<super::ProfileNode> {
    let tree = multiplicity_sequence(f, p)?;
    let a = f.localize(p);
    let b = g.localize(p);
    Ok(tree.map(&|node| {
        let (mut a, mut b) = (a.clone(), b.clone());
        for step in &node.path {
            let ma = a.multiplicity().unwrap_or(0);
            let mb = b.multiplicity().unwrap_or(0);
            a = step.apply(&a, ma);
            b = step.apply(&b, mb);
        }
        b.multiplicity().unwrap_or(0)
    }))
}
