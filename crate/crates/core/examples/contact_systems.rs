//! Dimensions of the contact systems at the multiples of a point of order 9.

use unisecant::cubic::{ec_scalar_mul, weierstrass_at_flex};
use unisecant::pencils::contact_system;
use unisecant::{fixtures, ProjectivePoint};

fn main() -> unisecant::Result<()> {
    let f = fixtures::kubert9();
    let w = weierstrass_at_flex(&f, &ProjectivePoint::from_ints(0, 1, 0))?;
    let p = w.to_affine(&ProjectivePoint::from_ints(0, 0, 1))?;
    println!("n   point            k=1 k=2 k=3");
    for n in 1..=8 {
        let q = w.to_projective(&ec_scalar_mul(&w, n, &p)?)?;
        let dims: Vec<String> = (1..=3)
            .map(|k| contact_system(&f, &q, k).map(|s| s.dimension().to_string()))
            .collect::<Result<_, _>>()?;
        println!("{n}   {:<16} {}", q.to_string(), dims.join("   "));
    }
    Ok(())
}
