//! Conics with 6-fold contact at points of order dividing 6.

use unisecant::pencils::contact_conic_check;
use unisecant::{fixtures, ProjectivePoint};

fn main() {
    let f = fixtures::kubert6();
    for p in [(0, 0, 1), (0, 1, 0), (2, 2, 1)] {
        let p = ProjectivePoint::from_ints(p.0, p.1, p.2);
        match contact_conic_check(&f, &p) {
            Ok((kind, q)) => println!("{p}: {} {q}", kind.as_str()),
            Err(e) => println!("{p}: {e}"),
        }
    }
}
