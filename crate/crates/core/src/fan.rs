//! Simplicial fans in ℤⁿ: validation, walls, stars and chart bases.

use std::collections::{BTreeSet, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{self, dot, fmt_vector, IntMatrix, IntVector, SublatticeClass};

/// A cone is the sorted list of its ray indices; the zero cone is empty.
pub type Cone = Vec<usize>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Fan {
    ambient_rank: usize,
    rays: Vec<IntVector>,
    cones: BTreeSet<Cone>,
    tops: Vec<Cone>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub smooth: bool,
    pub good: bool,
    pub proper: bool,
}

/// An (n−1)-dimensional cone with the top cones containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Wall {
    pub cone: Cone,
    /// Indices into [`Fan::top_cones`].
    pub upper: Vec<usize>,
    pub span: SublatticeClass,
}

impl Wall {
    pub fn is_interior(&self) -> bool {
        self.upper.len() == 2
    }
}

/// The lattice automorphism sending the sorted rays of a top cone to the
/// standard basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartBasis {
    pub top_cone: usize,
    pub matrix: IntMatrix,
}

impl Fan {
    /// Builds a fan from a face-closed cone set.
    pub fn new(ambient_rank: usize, rays: Vec<IntVector>, cones: impl IntoIterator<Item = Cone>) -> Result<Self> {
        let cones: BTreeSet<Cone> = cones.into_iter().map(normalize_cone).collect::<Result<_>>()?;
        check_rays(ambient_rank, &rays)?;
        for cone in &cones {
            check_cone(ambient_rank, &rays, cone)?;
            for face in proper_faces(cone) {
                if !cones.contains(&face) {
                    return Err(Error::MalformedFan(format!(
                        "cone {cone:?} is listed but its face {face:?} is not"
                    )));
                }
            }
        }
        if !cones.contains(&Vec::new()) {
            return Err(Error::MalformedFan("the zero cone is missing".into()));
        }
        Ok(Self::assemble(ambient_rank, rays, cones))
    }

    /// Builds a fan from generating cones, completing the face closure.
    pub fn from_maximal(
        ambient_rank: usize,
        rays: Vec<IntVector>,
        maximal: impl IntoIterator<Item = Cone>,
    ) -> Result<Self> {
        check_rays(ambient_rank, &rays)?;
        let mut cones = BTreeSet::new();
        cones.insert(Vec::new());
        for cone in maximal {
            let cone = normalize_cone(cone)?;
            check_cone(ambient_rank, &rays, &cone)?;
            for face in cone.iter().copied().powerset() {
                cones.insert(face);
            }
        }
        Ok(Self::assemble(ambient_rank, rays, cones))
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(ambient_rank: usize, rays: &[Vec<i64>], maximal: &[Vec<usize>]) -> Result<Self> {
        let rays = rays.iter().map(|r| lattice::int_vec(r)).collect();
        Self::from_maximal(ambient_rank, rays, maximal.iter().cloned())
    }

    fn assemble(ambient_rank: usize, rays: Vec<IntVector>, cones: BTreeSet<Cone>) -> Self {
        let tops = cones.iter().filter(|c| c.len() == ambient_rank).cloned().collect();
        Self {
            ambient_rank,
            rays,
            cones,
            tops,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn ray(&self, i: usize) -> &IntVector {
        &self.rays[i]
    }

    pub fn cones(&self) -> impl Iterator<Item = &Cone> {
        self.cones.iter()
    }

    pub fn cone_count(&self) -> usize {
        self.cones.len()
    }

    pub fn contains_cone(&self, cone: &[usize]) -> bool {
        self.cones.contains(cone)
    }

    /// Top-dimensional cones, lexicographically sorted. Their positions in
    /// this list are the top-cone ids used throughout the crate.
    pub fn top_cones(&self) -> &[Cone] {
        &self.tops
    }

    pub fn top_id(&self, cone: &[usize]) -> Option<usize> {
        self.tops.binary_search_by(|c| c.as_slice().cmp(cone)).ok()
    }

    pub fn cones_of_dim(&self, dim: usize) -> Vec<Cone> {
        self.cones.iter().filter(|c| c.len() == dim).cloned().collect()
    }

    /// Cones not contained in a larger cone.
    pub fn maximal_cones(&self) -> Vec<Cone> {
        self.cones
            .iter()
            .filter(|c| !self.cones.iter().any(|d| d.len() > c.len() && is_subset(c, d)))
            .cloned()
            .collect()
    }

    pub fn ray_vectors(&self, cone: &[usize]) -> Vec<IntVector> {
        cone.iter().map(|&i| self.rays[i].clone()).collect()
    }

    /// The saturated sublattice spanned by the rays of a cone.
    pub fn span(&self, cone: &[usize]) -> SublatticeClass {
        lattice::saturate(&self.ray_vectors(cone), self.ambient_rank).expect("rays have ambient rank")
    }

    /// Ids of the top cones containing `cone`.
    pub fn star(&self, cone: &[usize]) -> Vec<usize> {
        (0..self.tops.len())
            .filter(|&t| is_subset(cone, &self.tops[t]))
            .collect()
    }

    pub fn validate(&self) -> FanReport {
        let smooth = self.is_smooth();
        let pure = self.maximal_cones().iter().all(|c| c.len() == self.ambient_rank);
        FanReport {
            smooth,
            good: smooth && pure,
            proper: pure && self.is_complete(),
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.maximal_cones()
            .iter()
            .all(|c| lattice::generates_saturated(&self.ray_vectors(c), self.ambient_rank).unwrap_or(false))
    }

    pub fn is_good(&self) -> bool {
        self.validate().good
    }

    pub fn is_proper(&self) -> bool {
        self.validate().proper
    }

    pub fn ensure_good(&self) -> Result<()> {
        let report = self.validate();
        if !report.smooth {
            return Err(Error::NotGood("some maximal cone is not unimodular".into()));
        }
        if !report.good {
            return Err(Error::NotGood(
                "some cone is not a face of a top-dimensional cone".into(),
            ));
        }
        Ok(())
    }

    fn is_complete(&self) -> bool {
        if self.tops.is_empty() {
            return false;
        }
        for wall in self.cones_of_dim(self.ambient_rank - 1) {
            let upper = self.star(&wall);
            if upper.len() != 2 {
                return false;
            }
            let normal = self.span(&wall).primitive_normal().expect("wall spans have corank one");
            let sides: Vec<BigInt> = upper
                .iter()
                .map(|&t| {
                    let opposite = self.opposite_ray(t, &wall);
                    dot(&normal, &self.rays[opposite])
                })
                .collect();
            if sides[0].signum() == sides[1].signum() {
                return false;
            }
        }
        // point location for the coordinate directions
        (0..self.ambient_rank).all(|i| {
            [1i64, -1].iter().all(|&s| {
                let mut p = vec![BigInt::zero(); self.ambient_rank];
                p[i] = BigInt::from(s);
                self.locate(&p).is_some()
            })
        })
    }

    /// A top cone containing the point, if any.
    pub fn locate(&self, point: &[BigInt]) -> Option<usize> {
        (0..self.tops.len()).find(|&t| {
            let basis = IntMatrix::from_columns(&self.ray_vectors(&self.tops[t]), self.ambient_rank);
            let Some(inv) = basis.to_rational().inverse() else {
                return false;
            };
            (0..self.ambient_rank).all(|r| {
                let coord: BigRational = (0..self.ambient_rank)
                    .map(|c| inv.get(r, c) * BigRational::from_integer(point[c].clone()))
                    .sum();
                !coord.is_negative()
            })
        })
    }

    /// The ray of top cone `top` not lying on `wall`.
    pub fn opposite_ray(&self, top: usize, wall: &[usize]) -> usize {
        *self.tops[top]
            .iter()
            .find(|r| !wall.contains(r))
            .expect("wall is a facet of the top cone")
    }

    /// All (n−1)-cones with the top cones containing them.
    pub fn walls(&self) -> Result<Vec<Wall>> {
        self.ensure_good()?;
        Ok(self
            .cones_of_dim(self.ambient_rank - 1)
            .into_iter()
            .map(|cone| Wall {
                upper: self.star(&cone),
                span: self.span(&cone),
                cone,
            })
            .collect())
    }

    pub fn interior_walls(&self) -> Result<Vec<Wall>> {
        Ok(self.walls()?.into_iter().filter(Wall::is_interior).collect())
    }

    /// The chart φ_σ of a top cone: sends its j-th sorted ray to e_j.
    pub fn chart(&self, top: usize) -> Result<ChartBasis> {
        let cone = self.tops.get(top).ok_or_else(|| Error::NotTopCone(vec![top]))?;
        self.chart_of(cone)
    }

    pub fn chart_of(&self, cone: &[usize]) -> Result<ChartBasis> {
        let top = self.top_id(cone).ok_or_else(|| Error::NotTopCone(cone.to_vec()))?;
        let basis = IntMatrix::from_columns(&self.ray_vectors(cone), self.ambient_rank);
        let matrix = basis
            .unimodular_inverse()
            .ok_or_else(|| Error::NotSmooth(format!("top cone {cone:?} is not unimodular")))?;
        Ok(ChartBasis { top_cone: top, matrix })
    }

    /// Renames ray `i` to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Fan> {
        if perm.len() != self.rays.len() || perm.iter().copied().collect::<BTreeSet<_>>().len() != perm.len() {
            return Err(Error::MalformedFan("relabeling is not a permutation".into()));
        }
        let mut rays = vec![Vec::new(); self.rays.len()];
        for (i, r) in self.rays.iter().enumerate() {
            rays[perm[i]] = r.clone();
        }
        let cones = self.cones.iter().map(|c| c.iter().map(|&i| perm[i]).collect());
        Fan::new(self.ambient_rank, rays, cones)
    }

    /// Image of the fan under a unimodular map acting on column vectors.
    pub fn transform(&self, g: &IntMatrix) -> Result<Fan> {
        if !g.is_unimodular() || g.rows() != self.ambient_rank {
            return Err(Error::MalformedFan("transform is not a lattice automorphism".into()));
        }
        let rays = self.rays.iter().map(|r| g.apply(r)).collect::<Result<_>>()?;
        Fan::new(self.ambient_rank, rays, self.cones.iter().cloned())
    }

    /// Index of a ray by its vector.
    pub fn ray_index(&self, v: &[BigInt]) -> Option<usize> {
        self.rays.iter().position(|r| r.as_slice() == v)
    }

    pub fn describe_cone(&self, cone: &[usize]) -> String {
        let parts: Vec<String> = cone.iter().map(|&i| fmt_vector(&self.rays[i])).collect();
        format!("<{}>", parts.join(","))
    }
}

/// Searches for a lattice automorphism carrying `f` onto `g`.
///
/// Candidates are the maps sending the rays of the first top cone of `f` to an
/// ordered ray tuple of some top cone of `g`.
pub fn fan_isomorphic(f: &Fan, g: &Fan) -> Result<Option<IntMatrix>> {
    f.ensure_good()?;
    g.ensure_good()?;
    let n = f.ambient_rank();
    if n != g.ambient_rank()
        || f.rays().len() != g.rays().len()
        || f.cone_count() != g.cone_count()
        || f.top_cones().len() != g.top_cones().len()
    {
        return Ok(None);
    }
    let Some(anchor) = f.top_cones().first() else {
        return Ok(None);
    };
    let source = IntMatrix::from_columns(&f.ray_vectors(anchor), n);
    let source_inv = source
        .unimodular_inverse()
        .expect("good fans have unimodular top cones");
    let g_index: HashMap<&IntVector, usize> = g.rays().iter().enumerate().map(|(i, r)| (r, i)).collect();
    let g_cones: BTreeSet<&Cone> = g.cones().collect();
    for top in g.top_cones() {
        for order in top.iter().copied().permutations(n) {
            let target = IntMatrix::from_columns(&g.ray_vectors(&order), n);
            let m = target.mul(&source_inv)?;
            let Some(ray_map) = f
                .rays()
                .iter()
                .map(|r| m.apply(r).ok().and_then(|img| g_index.get(&img).copied()))
                .collect::<Option<Vec<usize>>>()
            else {
                continue;
            };
            let all_cones = f.cones().all(|c| {
                let mut image: Cone = c.iter().map(|&i| ray_map[i]).collect();
                image.sort_unstable();
                g_cones.contains(&image)
            });
            if all_cones {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

fn normalize_cone(mut cone: Cone) -> Result<Cone> {
    cone.sort_unstable();
    if cone.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::MalformedFan(format!("cone {cone:?} repeats a ray")));
    }
    Ok(cone)
}

fn check_rays(ambient_rank: usize, rays: &[IntVector]) -> Result<()> {
    if ambient_rank == 0 {
        return Err(Error::MalformedFan("ambient rank must be positive".into()));
    }
    for (i, r) in rays.iter().enumerate() {
        if r.len() != ambient_rank {
            return Err(Error::MalformedFan(format!(
                "ray {i} has dimension {}, expected {ambient_rank}",
                r.len()
            )));
        }
        if !lattice::is_primitive(r) {
            return Err(Error::MalformedFan(format!(
                "ray {i} = {} is not primitive",
                fmt_vector(r)
            )));
        }
    }
    let distinct: BTreeSet<&IntVector> = rays.iter().collect();
    if distinct.len() != rays.len() {
        return Err(Error::MalformedFan("rays are not pairwise distinct".into()));
    }
    Ok(())
}

fn check_cone(ambient_rank: usize, rays: &[IntVector], cone: &[usize]) -> Result<()> {
    if let Some(&bad) = cone.iter().find(|&&i| i >= rays.len()) {
        return Err(Error::MalformedFan(format!(
            "cone {cone:?} references missing ray {bad}"
        )));
    }
    if cone.len() > ambient_rank {
        return Err(Error::MalformedFan(format!(
            "cone {cone:?} has too many rays to be simplicial"
        )));
    }
    let vectors: Vec<IntVector> = cone.iter().map(|&i| rays[i].clone()).collect();
    if !vectors.is_empty() && lattice::rank(&IntMatrix::from_big_rows(&vectors, ambient_rank)) != cone.len() {
        return Err(Error::MalformedFan(format!(
            "rays of cone {cone:?} are linearly dependent"
        )));
    }
    Ok(())
}

fn proper_faces(cone: &[usize]) -> impl Iterator<Item = Cone> + '_ {
    (0..cone.len()).map(move |skip| {
        cone.iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, &r)| r)
            .collect()
    })
}

/// Subset test for sorted index lists.
pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::lattice::int_vec;

    #[test]
    fn validate_standard_fans() {
        let report = corpus::projective_plane().validate();
        assert_eq!(
            report,
            FanReport {
                smooth: true,
                good: true,
                proper: true
            }
        );
        let bad = Fan::from_i64(2, &[vec![1, 0], vec![1, 2]], &[vec![0, 1]]).unwrap();
        assert!(!bad.validate().smooth);
        let (t, _) = corpus::example_flop_pair();
        assert_eq!(
            t.validate(),
            FanReport {
                smooth: true,
                good: true,
                proper: false
            }
        );
        assert!(!corpus::affine(2).is_proper());
        assert!(corpus::projective_line().is_proper());
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            Fan::new(2, vec![int_vec(&[1, 0]), int_vec(&[0, 1])], vec![vec![], vec![0, 1]]),
            Err(Error::MalformedFan(_))
        ));
        assert!(matches!(
            Fan::from_i64(2, &[vec![2, 0]], &[vec![0]]),
            Err(Error::MalformedFan(_))
        ));
        assert!(matches!(
            Fan::from_i64(2, &[vec![1, 0], vec![-1, 0]], &[vec![0, 1]]),
            Err(Error::MalformedFan(_))
        ));
        assert!(matches!(
            Fan::from_i64(2, &[vec![1, 0]], &[vec![0, 3]]),
            Err(Error::MalformedFan(_))
        ));
    }

    #[test]
    fn walls_of_small_fans() {
        let p1 = corpus::projective_line().walls().unwrap();
        assert_eq!(p1.len(), 1);
        assert!(p1[0].is_interior());
        assert_eq!(p1[0].span.rank(), 0);

        let p2 = corpus::projective_plane().walls().unwrap();
        assert_eq!(p2.len(), 3);
        assert!(p2.iter().all(Wall::is_interior));
        let spans: BTreeSet<SublatticeClass> = p2.iter().map(|w| w.span.clone()).collect();
        let expected: BTreeSet<SublatticeClass> = [[1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| lattice::saturate(&[int_vec(v)], 2).unwrap())
            .collect();
        assert_eq!(spans, expected);

        let a2 = corpus::affine(2).walls().unwrap();
        assert_eq!(a2.len(), 2);
        assert!(a2.iter().all(|w| !w.is_interior()));
    }

    #[test]
    fn walls_require_good() {
        let bad = Fan::from_i64(2, &[vec![1, 0], vec![1, 2]], &[vec![0, 1]]).unwrap();
        assert!(matches!(bad.walls(), Err(Error::NotGood(_))));
    }

    #[test]
    fn charts() {
        let a2 = corpus::affine(2);
        assert_eq!(a2.chart(0).unwrap().matrix, IntMatrix::identity(2));
        let p2 = corpus::projective_plane();
        // rays (1,0),(0,1),(-1,-1); cone [1,2]
        let top = p2.top_id(&[1, 2]).unwrap();
        let chart = p2.chart(top).unwrap();
        assert_eq!(chart.matrix, IntMatrix::from_rows(&[vec![-1, 1], vec![-1, 0]]));
        assert!(chart.matrix.is_unimodular());
        assert!(matches!(p2.chart_of(&[0]), Err(Error::NotTopCone(_))));
    }

    #[test]
    fn chart_round_trip_on_corpus() {
        for (_, f) in corpus::builtin() {
            for (t, cone) in f.top_cones().iter().enumerate() {
                let chart = f.chart(t).unwrap();
                for (j, &r) in cone.iter().enumerate() {
                    let mut e = vec![BigInt::zero(); f.ambient_rank()];
                    e[j] = BigInt::from(1);
                    assert_eq!(chart.matrix.apply(f.ray(r)).unwrap(), e);
                }
            }
        }
    }

    #[test]
    fn isomorphism_search() {
        let p2 = corpus::projective_plane();
        assert_eq!(fan_isomorphic(&p2, &p2).unwrap(), Some(IntMatrix::identity(2)));
        assert_eq!(fan_isomorphic(&p2, &corpus::p1_x_p1()).unwrap(), None);
        let (x, x2) = corpus::surface_pair();
        assert_eq!(fan_isomorphic(&x, &x2).unwrap(), None);
        let g = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let moved = p2.transform(&g).unwrap();
        let found = fan_isomorphic(&p2, &moved).unwrap().unwrap();
        assert!(found.is_unimodular());
    }
}
