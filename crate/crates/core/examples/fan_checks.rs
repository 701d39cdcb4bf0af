// Validation, walls, charts and isomorphism search on the built-in fans.

use toric_ell::corpus;
use toric_ell::fan::fan_isomorphic;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, f) in corpus::builtin() {
        let r = f.validate();
        let interior = if r.good { f.interior_walls()?.len() } else { 0 };
        println!(
            "{name:16} rank {} rays {:2} tops {:2} smooth {} good {} proper {} interior walls {}",
            f.ambient_rank(),
            f.rays().len(),
            f.top_cones().len(),
            r.smooth,
            r.good,
            r.proper,
            interior
        );
    }

    let p2 = corpus::projective_plane();
    for t in 0..p2.top_cones().len() {
        let chart = p2.chart(t)?;
        println!("chart of {} = {:?}", p2.describe_cone(&p2.top_cones()[t]), chart.matrix);
    }

    let (x, x2) = corpus::surface_pair();
    println!(
        "surface pair isomorphic as fans: {}",
        fan_isomorphic(&x, &x2)?.is_some()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
