//! Writes the fixture corpus as curve files and loads them back, which
//! re-verifies every flex and torsion claim.
//!
//! `cargo run --example curve_files -- <dir>`

use std::path::PathBuf;

use unisecant::fixtures::{all_curves, CurveFile};

fn main() -> unisecant::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&dir).expect("create output directory");
    for c in all_curves() {
        let path = dir.join(format!("{}.json", c.name));
        std::fs::write(&path, c.to_file().to_json_string() + "\n").expect("write curve file");
        let back = CurveFile::load(&path)?;
        println!("{} ({} flexes, {} torsion claims)", path.display(), back.flexes.len(), back.torsion.len());
    }
    Ok(())
}
