//! Writes the shipped fixture set. Usage: `emit_fixtures [DIR]`.

use std::path::PathBuf;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures"));
    std::fs::create_dir_all(&dir)?;
    for (file, fx) in tannaka::catalog::standard()? {
        fx.save(&dir.join(&file))?;
        println!("{file} ({})", fx.kind());
    }
    Ok(())
}
