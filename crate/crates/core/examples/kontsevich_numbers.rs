//! Rational plane curves of degree k through 3k − 1 general points.

use unisecant::kontsevich::NkTable;

fn main() -> unisecant::Result<()> {
    let table = NkTable::compute(8)?;
    for (k, n) in table.entries() {
        println!("N_{k} = {n}");
    }
    Ok(())
}
