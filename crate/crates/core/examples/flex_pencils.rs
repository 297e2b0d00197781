//! Singular members of the pencil spanned by a normal form and the cube of
//! its inflection tangent.

use unisecant::cubic::WeierstrassData;
use unisecant::exactalg::{int, ratio};
use unisecant::pencils::flex_pencil_count;

fn main() -> unisecant::Result<()> {
    for (a, b) in [(int(-3), int(0)), (int(-4), int(0)), (int(-3), int(2)), (int(0), ratio(-1, 4))] {
        let w = WeierstrassData::normal(a.clone(), b.clone());
        let r = flex_pencil_count(&w)?;
        let kinds: Vec<&str> = r.kinds.iter().map(|k| k.as_str()).collect();
        println!(
            "alpha = {a:>3}, beta = {b:>5}: {} singular members {:?}, triple line multiplicity {}",
            r.count, kinds, r.triple_line_multiplicity
        );
    }
    Ok(())
}
