// Writing and reading fan documents.
//
// With a directory argument the built-in fans are written there as
// `<name>.fan.json`, together with the two flop triangulations; otherwise
// a temporary directory is used.

use toric_ell::corpus;
use toric_ell::io::{emit_fan, parse_fan, parse_ray_text, parse_triangulation, TriangulationDocument};
use toric_ell::triang::flop_example;

pub fn write_corpus(dir: &std::path::Path) -> Result<usize, Box<dyn std::error::Error>> {
    std::fs::create_dir_all(dir)?;
    let fans = corpus::builtin();
    for (name, f) in &fans {
        std::fs::write(dir.join(format!("{name}.fan.json")), emit_fan(f, name)?)?;
    }
    let ex = flop_example();
    for (name, t) in [("flop-source", &ex.source), ("flop-target", &ex.target)] {
        let doc = TriangulationDocument::from_triangulation(t)?;
        std::fs::write(
            dir.join(format!("{name}.tri.json")),
            serde_json::to_string_pretty(&doc)? + "\n",
        )?;
    }
    Ok(fans.len() + 2)
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let dir = match std::env::args().nth(1) {
        Some(d) if !d.starts_with('-') => std::path::PathBuf::from(d),
        _ => std::env::temp_dir().join(format!("toric-ell-corpus-{}", std::process::id())),
    };
    let written = write_corpus(&dir)?;
    println!("wrote {written} files to {}", dir.display());

    let p2 = parse_fan(&std::fs::read(dir.join("p2.fan.json"))?)?;
    assert_eq!(p2, corpus::projective_plane());
    let t = parse_triangulation(&std::fs::read(dir.join("flop-target.tri.json"))?)?;
    assert_eq!(t, flop_example().target);
    let typed = parse_ray_text("(1,0) (0,1) (-1,-1)")?;
    println!("ray list gives a proper fan: {}", typed.is_proper());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
