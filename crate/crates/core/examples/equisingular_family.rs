//! The derivative of an equisingular family has weak type μ − 1 at each
//! singular point.

use unisecant::fixtures;
use unisecant::singular::family_derivative_check;

fn main() -> unisecant::Result<()> {
    for (name, fam) in [
        ("moving node", fixtures::moving_node_family()),
        ("moving cusp", fixtures::moving_cusp_family()),
    ] {
        let check = family_derivative_check(&fam, 5)?;
        println!("{name}: derivative {} -> {}", check.derivative, check.holds());
    }
    Ok(())
}
