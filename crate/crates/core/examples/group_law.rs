//! Multiples of the rational point of order 9 on the Kubert curve.

use unisecant::cubic::{ec_scalar_mul, point_order, weierstrass_at_flex};
use unisecant::{fixtures, ProjectivePoint};

fn main() -> unisecant::Result<()> {
    let f = fixtures::kubert9();
    let w = weierstrass_at_flex(&f, &ProjectivePoint::from_ints(0, 1, 0))?;
    let p = w.to_affine(&ProjectivePoint::from_ints(0, 0, 1))?;
    println!("curve {f}");
    println!("y² = 4x³ + ({})x + ({})", w.alpha, w.beta);
    for n in 0..=9 {
        let q = ec_scalar_mul(&w, n, &p)?;
        println!("{n}·P = {}", w.to_projective(&q)?);
    }
    println!("order {:?}", point_order(&w, &p, 20)?);
    Ok(())
}
