//! Infinitely-near multiplicity trees and geometric genus.

use unisecant::exactalg::int;
use unisecant::singular::{genus_with_profile, multiplicity_sequence};
use unisecant::{fixtures, HomogeneousForm, ProjectivePoint};

fn main() -> unisecant::Result<()> {
    for c in fixtures::singular_curves() {
        let (g, profile) = genus_with_profile(&c.form, false)?;
        println!("{}: genus {g}, delta {}", c.name, profile.delta());
        for (p, tree) in &profile.points {
            println!("  {p}: {:?}", tree.multiplicities());
        }
    }
    // X1²X2² = X0⁴ + X1⁴: tacnode, two points of multiplicity 2
    let tac = HomogeneousForm::from_terms(
        4,
        [([0, 2, 2], int(1)), ([4, 0, 0], int(-1)), ([0, 4, 0], int(-1))],
    )?;
    let tree = multiplicity_sequence(&tac, &ProjectivePoint::from_ints(0, 0, 1))?;
    println!("tacnode: {:?}, delta {}", tree.multiplicities(), tree.delta());
    Ok(())
}
