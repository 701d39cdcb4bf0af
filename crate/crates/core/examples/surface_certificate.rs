// Incidence matrices of proper toric surfaces and the change-of-basis
// certificate between two surfaces that differ by reversing one ray.

use toric_ell::corpus;
use toric_ell::ellinv::{flip_certificate, incidence_matrix};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let p2 = incidence_matrix(&corpus::projective_plane(), 0)?;
    println!("P2 incidence (rays {:?}): {:?}", p2.ray_order, p2.matrix);

    let (x, x2) = corpus::surface_pair();
    let cert = flip_certificate(&x, &x2)?;
    println!("A_X  = {:?}", cert.source.matrix);
    println!("A_X' = {:?}", cert.target.matrix);
    println!("M    = {:?} (det {})", cert.matrix, cert.matrix.determinant()?);
    println!("rays: {:?}", cert.ray_bijection);
    assert!(cert.verify());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
