// The elliptic cohomology shadow of a fan, its Mayer–Vietoris terms and
// comparison verdicts.

use toric_ell::corpus;
use toric_ell::ellinv::{compare, compare_fans, ell_shadow, mv_ladder, Outcome};
use toric_ell::fan::fan_isomorphic;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = corpus::projective_plane();
    let shadow = ell_shadow(&p2)?;
    println!("P2: rank {} det degree {}", shadow.rank, shadow.det_degree());
    for term in mv_ladder(&p2)?.terms {
        let flagged = term.summands.iter().filter(|s| s.vanishes_in_codim_two).count();
        println!(
            "  term {}: {} summands, {} supported in codimension two",
            term.k,
            term.summands.len(),
            flagged
        );
    }

    // same invariants, different varieties
    let (x, x2) = corpus::surface_pair();
    let verdict = compare_fans(&x, &x2)?;
    println!(
        "surface pair: {:?} ({}), fans isomorphic: {}",
        verdict.outcome,
        verdict.rule,
        fan_isomorphic(&x, &x2)?.is_some()
    );
    assert_eq!(verdict.outcome, Outcome::Isomorphic);

    // the two crepant resolutions of the mu2-kernel quotient differ
    let (t, t2) = corpus::example_flop_pair();
    let verdict = compare(&ell_shadow(&t)?, &ell_shadow(&t2)?, None)?;
    println!("flop pair: {:?} witness {:?}", verdict.outcome, verdict.witness);
    assert_eq!(verdict.outcome, Outcome::NotIsomorphic);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
