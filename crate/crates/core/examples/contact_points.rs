//! Contact points of a smooth cubic at level k, sorted by the lowest level
//! at which they already appear.

use unisecant::torsion::{contact_count, level_histogram, primitive_contact_count};

fn main() -> unisecant::Result<()> {
    for k in 1..=6 {
        let hist = level_histogram(k)?;
        println!(
            "k = {k}: {} points, {} primitive, by level {:?}",
            contact_count(k)?,
            primitive_contact_count(k)?,
            hist
        );
    }
    Ok(())
}
