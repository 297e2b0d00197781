//! Rational cubics meeting a smooth cubic in one point.

use unisecant::fixtures;
use unisecant::pencils::unisecant_count_k3;

fn main() -> unisecant::Result<()> {
    for c in fixtures::smooth_cubics() {
        let u = unisecant_count_k3(&c.form)?;
        println!("{:<28} j = {:<16} flex pencil {}  total {}", c.name, u.j.to_string(), u.flex_pencil, u.total);
    }
    Ok(())
}
