//! Moment graphs of good toric varieties.
//!
//! Vertices are the torus fixed points (top cones), edges the one-dimensional
//! orbits (walls). An edge is labelled by the primitive character vanishing on
//! its wall; the kernel of that character is the isotropy sublattice.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::Result;
use crate::fan::{Cone, Fan};
use crate::lattice::{fmt_vector, IntVector, JsonInts, SublatticeClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentGraph {
    pub ambient_rank: usize,
    /// Top cones; vertex `i` is `vertices[i]`.
    pub vertices: Vec<Cone>,
    pub edges: Vec<MomentEdge>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MomentEdge {
    pub wall: Cone,
    /// One endpoint for a non-compact orbit, two for a compact one.
    pub endpoints: Vec<usize>,
    /// Primitive character, normalized so its first nonzero entry is positive.
    #[serde(serialize_with = "serialize_label")]
    pub label: IntVector,
    pub isotropy: SublatticeClass,
    pub compact: bool,
}

fn serialize_label<S: serde::Serializer>(v: &IntVector, s: S) -> std::result::Result<S::Ok, S::Error> {
    JsonInts(v).serialize(s)
}

/// The data of the moment graph visible without the incidence relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartialSkeleton {
    pub vertex_count: usize,
    /// Isotropy classes of the compact edges, sorted.
    pub edge_labels: Vec<SublatticeClass>,
}

pub fn moment_graph(f: &Fan) -> Result<MomentGraph> {
    let edges = f
        .walls()?
        .into_iter()
        .map(|w| {
            let label = w.span.primitive_normal()?;
            Ok(MomentEdge {
                compact: w.is_interior(),
                endpoints: w.upper,
                wall: w.cone,
                label,
                isotropy: w.span,
            })
        })
        .collect::<Result<_>>()?;
    Ok(MomentGraph {
        ambient_rank: f.ambient_rank(),
        vertices: f.top_cones().to_vec(),
        edges,
    })
}

pub fn partial_skeleton(g: &MomentGraph) -> PartialSkeleton {
    let mut edge_labels: Vec<SublatticeClass> = g
        .edges
        .iter()
        .filter(|e| e.compact)
        .map(|e| e.isotropy.clone())
        .collect();
    edge_labels.sort();
    PartialSkeleton {
        vertex_count: g.vertices.len(),
        edge_labels,
    }
}

impl MomentGraph {
    pub fn compact_edges(&self) -> impl Iterator<Item = &MomentEdge> {
        self.edges.iter().filter(|e| e.compact)
    }

    /// Graphviz rendering; non-compact edges end in a point-shaped stub node.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph moment {\n");
        for (i, cone) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{i} [label=\"{i}: {cone:?}\"];");
        }
        for (k, e) in self.edges.iter().enumerate() {
            let label = fmt_vector(&e.label);
            match e.endpoints.as_slice() {
                [a, b] => {
                    let _ = writeln!(out, "  v{a} -- v{b} [label=\"{label}\"];");
                }
                [a] => {
                    let _ = writeln!(out, "  open{k} [shape=point];");
                    let _ = writeln!(out, "  v{a} -- open{k} [label=\"{label}\", style=dashed];");
                }
                _ => {}
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lattice::{int_vec, saturate};

    fn line(v: &[i64]) -> SublatticeClass {
        saturate(&[int_vec(v)], 2).unwrap()
    }

    #[test]
    fn projective_line_graph() {
        let g = moment_graph(&corpus::projective_line()).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges.len(), 1);
        assert!(g.edges[0].compact);
        assert_eq!(g.edges[0].isotropy.rank(), 0);
        assert_eq!(g.edges[0].label, int_vec(&[1]));
    }

    #[test]
    fn projective_plane_graph() {
        let g = moment_graph(&corpus::projective_plane()).unwrap();
        assert_eq!(g.vertices.len(), 3);
        assert_eq!(g.compact_edges().count(), 3);
        let mut labels: Vec<IntVector> = g.edges.iter().map(|e| e.label.clone()).collect();
        labels.sort();
        assert_eq!(labels, vec![int_vec(&[0, 1]), int_vec(&[1, -1]), int_vec(&[1, 0])]);
        for e in &g.edges {
            assert_eq!(SublatticeClass::from_normal(&e.label), e.isotropy);
        }
        let skel = partial_skeleton(&g);
        let mut expected = vec![line(&[1, 0]), line(&[0, 1]), line(&[1, 1])];
        expected.sort();
        assert_eq!(
            skel,
            PartialSkeleton {
                vertex_count: 3,
                edge_labels: expected
            }
        );
    }

    #[test]
    fn affine_plane_graph() {
        let g = moment_graph(&corpus::affine(2)).unwrap();
        assert_eq!(g.vertices.len(), 1);
        assert_eq!(g.edges.len(), 2);
        assert!(g.edges.iter().all(|e| !e.compact && e.endpoints.len() == 1));
        let skel = partial_skeleton(&g);
        assert_eq!(skel.vertex_count, 1);
        assert!(skel.edge_labels.is_empty());
        assert!(g.to_dot().contains("style=dashed"));
    }

    #[test]
    fn surface_skeleton_is_ray_lines() {
        let (x, _) = corpus::surface_pair();
        let skel = partial_skeleton(&moment_graph(&x).unwrap());
        assert_eq!(skel.vertex_count, 6);
        let mut expected: Vec<SublatticeClass> = x
            .rays()
            .iter()
            .map(|r| saturate(std::slice::from_ref(r), 2).unwrap())
            .collect();
        expected.sort();
        assert_eq!(skel.edge_labels, expected);
    }

    #[test]
    fn skeleton_transports_under_automorphism() {
        let g = crate::lattice::IntMatrix::from_rows(&[vec![1, 1], vec![0, 1]]);
        for f in [
            corpus::projective_plane(),
            corpus::hirzebruch(1),
            corpus::surface_pair().1,
        ] {
            let moved = f.transform(&g).unwrap();
            let mut transported: Vec<SublatticeClass> = partial_skeleton(&moment_graph(&f).unwrap())
                .edge_labels
                .iter()
                .map(|c| c.transform(&g).unwrap())
                .collect();
            transported.sort();
            assert_eq!(
                transported,
                partial_skeleton(&moment_graph(&moved).unwrap()).edge_labels
            );
        }
    }
}
