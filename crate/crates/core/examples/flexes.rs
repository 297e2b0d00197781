//! Hessian and flexes of the smooth cubics in the fixture corpus.

use unisecant::cubic::{flexes, hessian};
use unisecant::fixtures;

fn main() -> unisecant::Result<()> {
    println!("Hessian of the Fermat cubic: {}", hessian(&fixtures::fermat())?);
    for c in fixtures::smooth_cubics() {
        let f = flexes(&c.form)?;
        let pts: Vec<String> = f.rational.iter().map(|p| p.to_string()).collect();
        println!(
            "{:<28} {} flexes, {} distinct, rational: {}",
            c.name,
            f.count_with_multiplicity,
            f.distinct,
            pts.join(" ")
        );
    }
    Ok(())
}
