//! Normal form at a flex and the j-invariant, before and after a change of
//! coordinates.

use unisecant::cubic::{j_invariant, weierstrass_any_flex};
use unisecant::{fixtures, Matrix3};

fn main() -> unisecant::Result<()> {
    let m = Matrix3::from_ints([[1, 2, 0], [0, 1, -1], [3, 0, 1]]);
    for c in fixtures::smooth_cubics() {
        let w = weierstrass_any_flex(&c.form)?;
        let moved = weierstrass_any_flex(&c.form.substitute_linear(&m))?;
        println!(
            "{:<28} alpha = {}, beta = {}, j = {} (moved: {})",
            c.name,
            w.alpha,
            w.beta,
            j_invariant(&w)?,
            j_invariant(&moved)?
        );
    }
    Ok(())
}
