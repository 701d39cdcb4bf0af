// Shrinking a Čech complex by cancelling isomorphic restriction pairs.

use toric_ell::cech::{cancel_matching_pairs, cech_nerve_complex, reduce_complex, FiniteComplex, Splitting};
use toric_ell::rational::RatMatrix;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let nerve = cech_nerve_complex(2);
    println!(
        "Cech complex of E^2: dims {:?}, homology {:?}",
        nerve.dims(),
        nerve.homology_ranks()
    );
    let (small, pairs) = cancel_matching_pairs(&nerve)?;
    for p in &pairs {
        println!("  cancel {} in degree {}", p.label, p.degree);
    }
    println!(
        "reduced: dims {:?}, labels {:?}",
        small.dims(),
        small.labels().unwrap_or_default()
    );
    assert_eq!(small.homology_ranks(), nerve.homology_ranks());

    let c = FiniteComplex::new(vec![2, 2], vec![RatMatrix::from_i64_rows(&[vec![2, 1], vec![0, 0]])])?;
    let d = reduce_complex(
        &c,
        0,
        &Splitting {
            k_source: vec![1],
            k_target: vec![0],
        },
    )?;
    println!("two-term complex {:?} -> {:?}", c.homology_ranks(), d.homology_ranks());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
