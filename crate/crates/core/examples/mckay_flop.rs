// Crepant resolutions of C^3/G for G the kernel of (mu_2)^3 -> mu_2: two
// triangulations related by one flop give derived-equivalent resolutions
// with different elliptic cohomology.

use toric_ell::ellinv::{compare_fans, Outcome};
use toric_ell::triang::{apply_flip, cone_fan, flips, flop_example, quotient_simplex, GroupSpec};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let ex = flop_example();
    println!("lattice points of the simplex: {:?}", ex.simplex.points());
    println!("available flips: {}", flips(&ex.source)?.len());

    let (flipped, certificate) = apply_flip(&ex.source, &ex.flip)?;
    assert_eq!(flipped, ex.target);
    println!("certificate replays: {}", certificate.verify()?);

    let (a, b) = (cone_fan(&ex.source)?, cone_fan(&ex.target)?);
    println!("both smooth and good: {}", a.is_good() && b.is_good());
    let verdict = compare_fans(&a, &b)?;
    println!("verdict {:?}: {:?}", verdict.outcome, verdict.witness);
    assert_eq!(verdict.outcome, Outcome::NotIsomorphic);

    for m in 2..5 {
        let s = quotient_simplex(&GroupSpec::antidiagonal(m))?;
        println!("A_{} singularity: interval with {} points", m - 1, s.points().len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
