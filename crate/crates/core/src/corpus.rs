//! Built-in fans used by the examples, tests and the command line tool.

use crate::fan::Fan;
use crate::triang::{cone_fan, flop_example};

/// 𝔸ⁿ: the positive orthant.
pub fn affine(n: usize) -> Fan {
    let rays: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    Fan::from_i64(n, &rays, &[(0..n).collect()]).expect("orthant is a fan")
}

pub fn projective_line() -> Fan {
    Fan::from_i64(1, &[vec![1], vec![-1]], &[vec![0], vec![1]]).expect("valid fan")
}

pub fn projective_plane() -> Fan {
    Fan::from_i64(
        2,
        &[vec![1, 0], vec![0, 1], vec![-1, -1]],
        &[vec![0, 1], vec![1, 2], vec![0, 2]],
    )
    .expect("valid fan")
}

pub fn p1_x_p1() -> Fan {
    hirzebruch(0)
}

/// The Hirzebruch surface 𝔽_a.
pub fn hirzebruch(a: i64) -> Fan {
    Fan::from_i64(
        2,
        &[vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]],
        &[vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]],
    )
    .expect("valid fan")
}

/// Two smooth projective toric surfaces with six rays each that share all
/// wall sublattices but are not isomorphic; they differ by reversing the ray
/// (−1,0) into (1,0).
pub fn surface_pair() -> (Fan, Fan) {
    let x = Fan::from_i64(
        2,
        &[
            vec![1, -1],
            vec![0, 1],
            vec![0, -1],
            vec![-1, 0],
            vec![-1, -1],
            vec![-1, -2],
        ],
        &[vec![0, 1], vec![1, 3], vec![3, 4], vec![4, 5], vec![2, 5], vec![0, 2]],
    )
    .expect("valid fan");
    let x2 = Fan::from_i64(
        2,
        &[
            vec![1, 0],
            vec![0, 1],
            vec![1, -1],
            vec![-1, -1],
            vec![0, -1],
            vec![-1, -2],
        ],
        &[vec![0, 1], vec![1, 3], vec![3, 5], vec![4, 5], vec![2, 4], vec![0, 2]],
    )
    .expect("valid fan");
    (x, x2)
}

/// Cones over the two triangulations of the μ₂-kernel flop example.
pub fn example_flop_pair() -> (Fan, Fan) {
    let ex = flop_example();
    (
        cone_fan(&ex.source).expect("unimodular"),
        cone_fan(&ex.target).expect("unimodular"),
    )
}

/// Every named built-in fan.
pub fn builtin() -> Vec<(&'static str, Fan)> {
    let (x, x2) = surface_pair();
    let (t, t2) = example_flop_pair();
    vec![
        ("a1", affine(1)),
        ("a2", affine(2)),
        ("a3", affine(3)),
        ("p1", projective_line()),
        ("p2", projective_plane()),
        ("p1xp1", p1_x_p1()),
        ("f1", hirzebruch(1)),
        ("f2", hirzebruch(2)),
        ("surface-x", x),
        ("surface-x-prime", x2),
        ("flop-source", t),
        ("flop-target", t2),
    ]
}

pub fn by_name(name: &str) -> Option<Fan> {
    builtin().into_iter().find(|(n, _)| *n == name).map(|(_, f)| f)
}
