// Hermite normal forms, determinants, saturation and wall normals.

use toric_ell::lattice::{self, int_vec, IntMatrix, SublatticeClass};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = IntMatrix::from_rows(&[vec![2, 4], vec![1, 1]]);
    let (h, u) = lattice::hnf_with_transform(&m);
    println!("hnf {m:?} = {h:?} via {u:?}");
    assert_eq!(u.mul(&m)?, h);
    println!("det = {}", m.determinant()?);

    // the line through (2,4) is saturated to Z(1,2)
    let line = lattice::saturate(&[int_vec(&[2, 4])], 2)?;
    println!("saturate (2,4) -> {line}, normal {:?}", line.primitive_normal()?);
    assert_eq!(SublatticeClass::from_normal(&line.primitive_normal()?), line);

    let kernel = lattice::integer_kernel(&IntMatrix::from_rows(&[vec![1, 1, 1]]));
    println!("kernel of (1,1,1): {kernel:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
