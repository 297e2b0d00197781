//! The pencil of cubics with 9-fold contact at a point of order 9.

use unisecant::pencils::nonflex_fiber_accounting;
use unisecant::{fixtures, ProjectivePoint};

fn main() -> unisecant::Result<()> {
    let f = fixtures::kubert9();
    let p = ProjectivePoint::from_ints(0, 0, 1);
    let acc = nonflex_fiber_accounting(&f, &p)?;
    println!("generators: {} and {}", acc.pencil.g, acc.pencil.curve);
    let (s1, s2) = acc.singular_member.parameter.coords();
    println!("singular at P: ({s1} : {s2}), {}", acc.kind_at_point);
    println!("pattern {:?}", acc.report.multiplicity_pattern());
    println!("{}", serde_json::to_string_pretty(&acc.report.to_json()).unwrap());
    Ok(())
}
