// The moment graph of a toric surface and the part of it visible to
// elliptic cohomology.

use toric_ell::corpus;
use toric_ell::gkm::{moment_graph, partial_skeleton};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let graph = moment_graph(&corpus::hirzebruch(1))?;
    print!("{}", graph.to_dot());
    let skeleton = partial_skeleton(&graph);
    println!("fixed points: {}", skeleton.vertex_count);
    for class in &skeleton.edge_labels {
        println!("isotropy {class}");
    }

    let open = moment_graph(&corpus::affine(2))?;
    println!(
        "A^2: {} vertex, {} non-compact edges",
        open.vertices.len(),
        open.edges.len()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("example failed");
}
