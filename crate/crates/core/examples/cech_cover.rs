// The distinguished cover of M_X, its intersection poset, and the smooth
// opens matched to each singular open in the top-but-one grade.

use toric_ell::cech::{cech_poset, classify, coho_witness_in, cover, Classification};
use toric_ell::corpus;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, f) in [("P1", corpus::projective_line()), ("P2", corpus::projective_plane())] {
        let cover = cover(&f)?;
        println!("{name}: cover of size {}", cover.len());
        for e in &cover {
            println!("  {}", e.describe());
        }
        let poset = cech_poset(&f)?;
        println!(
            "  poset grades {:?}, support sizes {:?}",
            poset.grade_counts(),
            poset.support_histogram()
        );
        for e in &poset.elements {
            if let Classification::Singular { components, .. } = classify(e) {
                println!("  singular {} with {} components", e.describe(), components.len());
            }
        }
        for entry in coho_witness_in(&poset)?.entries {
            let show = |i: usize| poset.elements[i].describe();
            println!(
                "  {} -> components {} {} inside {} {}",
                show(entry.element),
                show(entry.components[0]),
                show(entry.components[1]),
                show(entry.smooth_covers[0]),
                show(entry.smooth_covers[1])
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
