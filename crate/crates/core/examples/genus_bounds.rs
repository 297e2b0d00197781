//! Genus bound for curves meeting a plane curve in one moving point, and
//! the intersection certificate on singular curves.

use unisecant::fixtures;
use unisecant::singular::{genus_bound, lemma5_certificate, lemma5_datum};

fn main() -> unisecant::Result<()> {
    for deg_c in 3..=5 {
        let row: Vec<String> = (1..=6).map(|k| genus_bound(deg_c, k).to_string()).collect();
        println!("deg C = {deg_c}: {}", row.join(" "));
    }
    for c in fixtures::singular_curves() {
        let (sq, mu, ac) = lemma5_datum(&c.form, 3)?;
        println!("{}: {sq} >= {mu} + {ac}? {}", c.name, lemma5_certificate(sq, mu, ac));
    }
    Ok(())
}
