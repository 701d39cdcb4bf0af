#[allow(dead_code)]
mod lattice_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lattice_normal_forms.rs"));
}
#[allow(dead_code)]
mod fan_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/fan_checks.rs"));
}
#[allow(dead_code)]
mod gkm_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/moment_graph.rs"));
}
#[allow(dead_code)]
mod ellinv_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/elliptic_invariants.rs"));
}
#[allow(dead_code)]
mod certificate_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/surface_certificate.rs"));
}
#[allow(dead_code)]
mod cech_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/cech_cover.rs"));
}
#[allow(dead_code)]
mod reduction_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/complex_reduction.rs"));
}
#[allow(dead_code)]
mod flop_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/mckay_flop.rs"));
}
#[allow(dead_code)]
mod corpus_example {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/corpus_files.rs"));
}

#[test]
fn lattice_example_runs() {
    lattice_example::run_example().expect("lattice example should run");
}

#[test]
fn fan_example_runs() {
    fan_example::run_example().expect("fan example should run");
}

#[test]
fn gkm_example_runs() {
    gkm_example::run_example().expect("moment graph example should run");
}

#[test]
fn ellinv_example_runs() {
    ellinv_example::run_example().expect("invariants example should run");
}

#[test]
fn certificate_example_runs() {
    certificate_example::run_example().expect("certificate example should run");
}

#[test]
fn cech_example_runs() {
    cech_example::run_example().expect("cech example should run");
}

#[test]
fn reduction_example_runs() {
    reduction_example::run_example().expect("reduction example should run");
}

#[test]
fn flop_example_runs() {
    flop_example::run_example().expect("flop example should run");
}

#[test]
fn corpus_example_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let n = corpus_example::write_corpus(dir.path()).expect("corpus should be written");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), n);
}
