//! Intersection points with multiplicities, and the split of the total
//! into strict transforms plus multiplicity products over a singular point.

use unisecant::singular::{blowup_intersection_identity, intersect};
use unisecant::{fixtures, HomogeneousForm};

fn main() -> unisecant::Result<()> {
    let nodal = fixtures::nodal_cubic();
    let through_node = HomogeneousForm::from_int_terms(1, &[(0, 1, 0, 1), (1, 0, 0, -2)]);
    let tangent = HomogeneousForm::from_int_terms(1, &[(0, 1, 0, 1), (1, 0, 0, -1)]);
    for (name, line) in [("X1 = 2X0", &through_node), ("X1 = X0", &tangent)] {
        let x = intersect(&nodal, line)?;
        let s = blowup_intersection_identity(&nodal, line)?;
        println!("nodal cubic and {name}:");
        for (p, m) in &x.points {
            println!("  {p} with multiplicity {m}");
        }
        println!("  {} = {} + {}", s.lhs, s.transform_term, s.mu_delta);
    }
    let x = intersect(&fixtures::tricuspidal_quartic(), &fixtures::fermat())?;
    println!("quartic and Fermat cubic: {} rational + {} irrational = {}", x.points.len(), x.irrational_multiplicity, x.total());
    Ok(())
}
