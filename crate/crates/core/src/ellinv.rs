//! Invariants of the equivariant elliptic cohomology sheaf of a good toric
//! variety, comparison verdicts, and incidence matrices of toric surfaces.
//!
//! 𝓔ll_T(X) is a vector bundle on Eⁿ whose rank is the number of top cones.
//! Away from codimension two it is cut out by the interior walls, so the rank
//! and the multiset of wall sublattices ⟨τ⟩ are invariants of the sheaf.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{is_subset, Cone, Fan};
use crate::lattice::{self, IntMatrix, SublatticeClass};
use crate::rational::RatMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EllShadow {
    pub ambient_rank: usize,
    /// Rank of 𝓔ll_T(X) as a vector bundle: the number of top cones.
    pub rank: usize,
    /// Spans of the interior walls, sorted (a multiset).
    pub wall_spans: Vec<SublatticeClass>,
    /// The determinant divisor, one term per distinct wall span.
    pub det_divisor: Vec<DivisorTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorTerm {
    pub class: SublatticeClass,
    pub coefficient: i64,
}

impl EllShadow {
    pub fn det_degree(&self) -> i64 {
        self.det_divisor.iter().map(|t| t.coefficient).sum()
    }
}

pub fn ell_shadow(f: &Fan) -> Result<EllShadow> {
    let mut wall_spans: Vec<SublatticeClass> = f.interior_walls()?.into_iter().map(|w| w.span).collect();
    wall_spans.sort();
    let mut divisor: BTreeMap<SublatticeClass, i64> = BTreeMap::new();
    for class in &wall_spans {
        *divisor.entry(class.clone()).or_default() -= 1;
    }
    Ok(EllShadow {
        ambient_rank: f.ambient_rank(),
        rank: f.top_cones().len(),
        wall_spans,
        det_divisor: divisor
            .into_iter()
            .map(|(class, coefficient)| DivisorTerm { class, coefficient })
            .collect(),
    })
}

/// The terms of the Mayer–Vietoris resolution
/// 0 → 𝓔ll_T(X) → ⊕ 𝒪_{σ_i} → ⊕ 𝒪_{σ_i∩σ_j} → …
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MayerVietorisLadder {
    pub ambient_rank: usize,
    /// `terms[k-1]` collects the k-fold intersections; the 𝓔ll_T(X) slot itself is not stored.
    pub terms: Vec<LadderTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderTerm {
    pub k: usize,
    pub summands: Vec<LadderSummand>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderSummand {
    /// Top cone ids i_1 < … < i_k.
    pub cones: Vec<usize>,
    /// Their common face.
    pub face: Cone,
    pub class: SublatticeClass,
    /// Set for k ≥ 2 when the class has corank at least two: such summands
    /// are supported in codimension two and do not affect the determinant.
    pub vanishes_in_codim_two: bool,
}

pub fn mv_ladder(f: &Fan) -> Result<MayerVietorisLadder> {
    f.ensure_good()?;
    let tops = f.top_cones();
    let terms = (1..=tops.len())
        .map(|k| LadderTerm {
            k,
            summands: (0..tops.len())
                .combinations(k)
                .map(|ids| {
                    let face: Cone = tops[ids[0]]
                        .iter()
                        .copied()
                        .filter(|r| ids.iter().all(|&i| tops[i].contains(r)))
                        .collect();
                    let class = f.span(&face);
                    LadderSummand {
                        vanishes_in_codim_two: k >= 2 && class.corank() >= 2,
                        cones: ids,
                        face,
                        class,
                    }
                })
                .collect(),
        })
        .collect();
    Ok(MayerVietorisLadder {
        ambient_rank: f.ambient_rank(),
        terms,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Outcome {
    NotIsomorphic,
    Isomorphic,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    RankMismatch {
        left: usize,
        right: usize,
    },
    /// Wall spans occurring more often on one side, with multiplicity.
    SpanMismatch {
        only_left: Vec<SublatticeClass>,
        only_right: Vec<SublatticeClass>,
    },
    /// Ray `i` of the first surface ↦ ray `j` of the second, with equal spans.
    RayBijection {
        pairs: Vec<(usize, usize)>,
    },
    NecessaryConditionsOnly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub outcome: Outcome,
    pub witness: Witness,
    /// Which criterion produced the outcome.
    pub rule: &'static str,
}

pub const RULE_RANK: &str = "rank of Ell_T equals the number of fixed points";
pub const RULE_WALLS: &str = "interior wall spans are determined by Ell_T";
pub const RULE_SURFACE: &str = "surfaces with span-preserving ray bijection have isomorphic Ell_T";
pub const RULE_NECESSARY: &str = "necessary conditions hold; sufficiency is only known for surfaces";

/// Compares two shadows; with `surfaces` supplied, good surfaces whose rays
/// can be matched span by span are declared isomorphic.
pub fn compare(a: &EllShadow, b: &EllShadow, surfaces: Option<(&Fan, &Fan)>) -> Result<Verdict> {
    if a.ambient_rank != b.ambient_rank {
        return Err(Error::RankMismatch {
            left: a.ambient_rank,
            right: b.ambient_rank,
        });
    }
    if a.rank != b.rank {
        return Ok(Verdict {
            outcome: Outcome::NotIsomorphic,
            witness: Witness::RankMismatch {
                left: a.rank,
                right: b.rank,
            },
            rule: RULE_RANK,
        });
    }
    if a.wall_spans != b.wall_spans {
        let (only_left, only_right) = multiset_difference(&a.wall_spans, &b.wall_spans);
        return Ok(Verdict {
            outcome: Outcome::NotIsomorphic,
            witness: Witness::SpanMismatch { only_left, only_right },
            rule: RULE_WALLS,
        });
    }
    if let Some((f, g)) = surfaces {
        if f.ambient_rank() == 2 && g.ambient_rank() == 2 {
            if let Some(pairs) = ray_span_bijection(f, g)? {
                return Ok(Verdict {
                    outcome: Outcome::Isomorphic,
                    witness: Witness::RayBijection { pairs },
                    rule: RULE_SURFACE,
                });
            }
        }
    }
    Ok(Verdict {
        outcome: Outcome::Unknown,
        witness: Witness::NecessaryConditionsOnly,
        rule: RULE_NECESSARY,
    })
}

/// Convenience wrapper computing both shadows and passing surface data.
pub fn compare_fans(f: &Fan, g: &Fan) -> Result<Verdict> {
    compare(&ell_shadow(f)?, &ell_shadow(g)?, Some((f, g)))
}

fn multiset_difference(a: &[SublatticeClass], b: &[SublatticeClass]) -> (Vec<SublatticeClass>, Vec<SublatticeClass>) {
    let mut count: BTreeMap<&SublatticeClass, i64> = BTreeMap::new();
    for c in a {
        *count.entry(c).or_default() += 1;
    }
    for c in b {
        *count.entry(c).or_default() -= 1;
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (c, n) in count {
        for _ in 0..n.max(0) {
            left.push(c.clone());
        }
        for _ in 0..(-n).max(0) {
            right.push(c.clone());
        }
    }
    (left, right)
}

/// Matches all rays of `f` with rays of `g` spanning the same line.
pub fn ray_span_bijection(f: &Fan, g: &Fan) -> Result<Option<Vec<(usize, usize)>>> {
    f.ensure_good()?;
    g.ensure_good()?;
    if f.rays().len() != g.rays().len() {
        return Ok(None);
    }
    let mut available: BTreeMap<SublatticeClass, Vec<usize>> = BTreeMap::new();
    for j in (0..g.rays().len()).rev() {
        available.entry(g.span(&[j])).or_default().push(j);
    }
    let mut pairs = Vec::new();
    for i in 0..f.rays().len() {
        match available.get_mut(&f.span(&[i])).and_then(Vec::pop) {
            Some(j) => pairs.push((i, j)),
            None => return Ok(None),
        }
    }
    Ok(Some(pairs))
}

/// The signed cone × ray incidence matrix of a proper good surface.
///
/// Row i is the top cone σ_i, column j the ray τ_j. An entry is +1 if τ_j lies
/// on σ_i and σ_i is the smaller-numbered of the two cones through τ_j, −1 if
/// it is the larger, and 0 otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceIncidence {
    pub m: usize,
    pub matrix: IntMatrix,
    /// Fan ray index of each column.
    pub ray_order: Vec<usize>,
    /// Top cone id of each row.
    pub cone_order: Vec<usize>,
}

impl SurfaceIncidence {
    /// The matrix of the map ℤ^{cones} → ℤ^{rays} (rays × cones).
    pub fn map_matrix(&self) -> IntMatrix {
        self.matrix.transpose()
    }

    fn from_orders(f: &Fan, ray_order: Vec<usize>, cone_order: Vec<usize>) -> Self {
        let m = ray_order.len();
        let mut matrix = IntMatrix::zeros(cone_order.len(), m);
        let row_of: BTreeMap<usize, usize> = cone_order.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        for (j, &ray) in ray_order.iter().enumerate() {
            let rows: Vec<usize> = f.star(&[ray]).iter().map(|t| row_of[t]).sorted().collect();
            if let [lo, hi] = rows.as_slice() {
                matrix.set(*lo, j, BigInt::one());
                matrix.set(*hi, j, -BigInt::one());
            }
        }
        Self {
            m,
            matrix,
            ray_order,
            cone_order,
        }
    }
}

fn ensure_proper_surface(f: &Fan) -> Result<()> {
    if f.ambient_rank() != 2 {
        return Err(Error::NotSurface(f.ambient_rank()));
    }
    f.ensure_good()?;
    if !f.is_proper() {
        return Err(Error::NotProper);
    }
    Ok(())
}

fn cross(u: &[BigInt], v: &[BigInt]) -> BigInt {
    &u[0] * &v[1] - &u[1] * &v[0]
}

/// Rays of a proper surface in clockwise order starting at `start`.
pub fn clockwise_rays(f: &Fan, start: usize) -> Result<Vec<usize>> {
    ensure_proper_surface(f)?;
    if start >= f.rays().len() {
        return Err(Error::MalformedFan(format!("no ray {start}")));
    }
    let mut order = vec![start];
    let mut cur = start;
    loop {
        let next = f
            .star(&[cur])
            .into_iter()
            .map(|t| f.opposite_ray(t, &[cur]))
            .find(|&r| cross(f.ray(cur), f.ray(r)).is_negative())
            .expect("proper surface fans have a clockwise neighbour");
        if next == start {
            return Ok(order);
        }
        order.push(next);
        cur = next;
    }
}

/// The incidence matrix with rays numbered clockwise from `start_ray` and
/// σ_k = cone(τ_k, τ_{k+1}) (indices mod m).
pub fn incidence_matrix(f: &Fan, start_ray: usize) -> Result<SurfaceIncidence> {
    let rays = clockwise_rays(f, start_ray)?;
    let m = rays.len();
    let cones = (0..m)
        .map(|k| {
            let mut c = vec![rays[k], rays[(k + 1) % m]];
            c.sort_unstable();
            f.top_id(&c).expect("consecutive rays span a top cone")
        })
        .collect();
    Ok(SurfaceIncidence::from_orders(f, rays, cones))
}

/// Certificate that the incidence matrices of two surfaces related by
/// reversing one ray differ by an invertible integer change of basis:
/// `source.map_matrix() = target.map_matrix() · matrix`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlipCertificate {
    pub source: SurfaceIncidence,
    pub target: SurfaceIncidence,
    pub matrix: IntMatrix,
    /// Ray `i` of the source fan ↦ ray `j` of the target fan.
    pub ray_bijection: Vec<(usize, usize)>,
}

impl FlipCertificate {
    pub fn verify(&self) -> bool {
        self.matrix.is_unimodular()
            && self.target.map_matrix().mul(&self.matrix).ok().as_ref() == Some(&self.source.map_matrix())
    }

    /// Chains `self: X → X′` with `next: X′ → X″`.
    pub fn compose(&self, next: &FlipCertificate) -> Result<FlipCertificate> {
        if self.target != next.source {
            return Err(Error::NotSingleFlip("certificates do not chain".into()));
        }
        let step: BTreeMap<usize, usize> = next.ray_bijection.iter().copied().collect();
        Ok(FlipCertificate {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix: next.matrix.mul(&self.matrix)?,
            ray_bijection: self.ray_bijection.iter().map(|&(i, j)| (i, step[&j])).collect(),
        })
    }
}

/// Certificate for `f` → `f2` using the canonical incidence matrix of `f`
/// (rays clockwise from ray 0).
pub fn flip_certificate(f: &Fan, f2: &Fan) -> Result<FlipCertificate> {
    let source = incidence_matrix(f, 0)?;
    flip_certificate_from(&source, f, f2)
}

/// Certificate for `f` → `f2` starting from a given incidence matrix of `f`,
/// so that certificates along a chain of reversals compose.
pub fn flip_certificate_from(source: &SurfaceIncidence, f: &Fan, f2: &Fan) -> Result<FlipCertificate> {
    ensure_proper_surface(f)?;
    ensure_proper_surface(f2)?;
    let bijection = reversal_bijection(f, f2)?;
    let m = source.m;

    // columns of the target follow the source's ray order through the bijection
    let target_rays: Vec<usize> = source.ray_order.iter().map(|r| bijection[r]).collect();
    let col_of: BTreeMap<usize, usize> = target_rays.iter().enumerate().map(|(j, &r)| (r, j)).collect();

    // cycle-sign vector c: the image of the source map is c^⊥
    let kernel = lattice::integer_kernel(&source.matrix);
    if kernel.rows() != 1 {
        return Err(Error::NotSingleFlip(
            "source incidence matrix has unexpected rank".into(),
        ));
    }
    let c: Vec<BigInt> = kernel.row(0).to_vec();

    let cycle = clockwise_rays(f2, target_rays[0])?;
    let source_rows: BTreeMap<Vec<usize>, usize> = source
        .cone_order
        .iter()
        .enumerate()
        .map(|(i, &t)| {
            let mut key: Vec<usize> = f.top_cones()[t].iter().map(|r| bijection[r]).collect();
            key.sort_unstable();
            (key, i)
        })
        .collect();
    // c is only defined up to sign; prefer the numbering that reproduces the source
    let mut target = None;
    for sign in [1, -1] {
        let c_signed: Vec<BigInt> = c.iter().map(|x| x * sign).collect();
        let cone_order = signed_cone_order(f2, &cycle, &c_signed, &col_of, &source_rows)?;
        let candidate = SurfaceIncidence::from_orders(f2, target_rays.clone(), cone_order);
        let exact = candidate.matrix == source.matrix;
        if target.is_none() || exact {
            target = Some(candidate);
        }
        if exact {
            break;
        }
    }
    let target = target.expect("at least one candidate");

    let matrix = if target.matrix == source.matrix {
        IntMatrix::identity(m)
    } else {
        change_of_basis(&source.map_matrix(), &target.map_matrix())?
    };
    let cert = FlipCertificate {
        source: source.clone(),
        target,
        matrix,
        ray_bijection: bijection.into_iter().collect(),
    };
    if !cert.verify() {
        return Err(Error::NotSingleFlip("certificate failed verification".into()));
    }
    Ok(cert)
}

/// Numbers the top cones of `f2` so that its incidence matrix has cycle-sign
/// vector `c`: walking clockwise, the cone after the ray in column j is
/// numbered below the cone before it exactly when c_j > 0.
fn signed_cone_order(
    f2: &Fan,
    cycle: &[usize],
    c: &[BigInt],
    col_of: &BTreeMap<usize, usize>,
    source_rows: &BTreeMap<Vec<usize>, usize>,
) -> Result<Vec<usize>> {
    let m = cycle.len();
    let cone_between = |a: usize, b: usize| {
        let mut cone = vec![a, b];
        cone.sort_unstable();
        f2.top_id(&cone).expect("consecutive rays span a top cone")
    };
    let mut below: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    let mut indegree: Vec<usize> = vec![0; f2.top_cones().len()];
    for k in 0..m {
        let ray = cycle[k];
        let before = cone_between(cycle[(k + m - 1) % m], ray);
        let after = cone_between(ray, cycle[(k + 1) % m]);
        let (lo, hi) = if c[col_of[&ray]].is_positive() {
            (after, before)
        } else {
            (before, after)
        };
        if below.entry(lo).or_default().insert(hi) {
            indegree[hi] += 1;
        }
    }
    // Kahn's algorithm, preferring the row position of the matching source cone
    let priority = |t: usize| source_rows.get(&f2.top_cones()[t]).copied().unwrap_or(m);
    let mut ready: BTreeSet<(usize, usize)> = (0..indegree.len())
        .filter(|&t| indegree[t] == 0)
        .map(|t| (priority(t), t))
        .collect();
    let mut order = Vec::with_capacity(m);
    while let Some((_, t)) = ready.pop_first() {
        order.push(t);
        for &u in below.get(&t).into_iter().flatten() {
            indegree[u] -= 1;
            if indegree[u] == 0 {
                ready.insert((priority(u), u));
            }
        }
    }
    if order.len() != m {
        return Err(Error::NotSingleFlip("sign pattern admits no cone numbering".into()));
    }
    Ok(order)
}

/// Ray bijection between fans whose ray sets agree except for one ray v ↦ −v.
fn reversal_bijection(f: &Fan, f2: &Fan) -> Result<BTreeMap<usize, usize>> {
    if f.rays().len() != f2.rays().len() {
        return Err(Error::NotSingleFlip(format!(
            "ray counts differ ({} vs {})",
            f.rays().len(),
            f2.rays().len()
        )));
    }
    let mut bijection = BTreeMap::new();
    let mut reversed = Vec::new();
    for (i, v) in f.rays().iter().enumerate() {
        if let Some(j) = f2.ray_index(v) {
            bijection.insert(i, j);
        } else {
            let neg: Vec<BigInt> = v.iter().map(|x| -x).collect();
            match f2.ray_index(&neg) {
                Some(j) => {
                    bijection.insert(i, j);
                    reversed.push(i);
                }
                None => {
                    return Err(Error::NotSingleFlip(format!(
                        "ray {} has no counterpart",
                        lattice::fmt_vector(v)
                    )))
                }
            }
        }
    }
    if reversed.len() > 1 {
        return Err(Error::NotSingleFlip(format!("{} rays are reversed", reversed.len())));
    }
    Ok(bijection)
}

/// Solves `a = b · M` for unimodular M when both maps have kernel spanned by
/// the all-ones vector and the same image.
fn change_of_basis(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let m = a.cols();
    // U = identity with last column all ones; U e_m spans both kernels
    let mut u = IntMatrix::identity(m);
    for r in 0..m {
        u.set(r, m - 1, BigInt::one());
    }
    let first: Vec<usize> = (0..m - 1).collect();
    let rows: Vec<usize> = (0..a.rows()).collect();
    let p = a.mul(&u)?.to_rational().select(&rows, &first);
    let q = b.mul(&u)?.to_rational().select(&rows, &first);
    let no_cert = || Error::NotSingleFlip("incidence images differ".into());
    let v = q.solve(&p).and_then(|v| v.to_integer()).ok_or_else(no_cert)?;
    if !v.is_unimodular() {
        return Err(no_cert());
    }
    let mut block = IntMatrix::identity(m);
    for r in 0..m - 1 {
        for c in 0..m - 1 {
            block.set(r, c, v.get(r, c).clone());
        }
    }
    let u_inv = u.unimodular_inverse().expect("U is unimodular");
    let result = u.mul(&block)?.mul(&u_inv)?;
    debug_assert!(RatMatrix::from_int(a) == RatMatrix::from_int(&b.mul(&result)?));
    Ok(result)
}

/// Top cone subsets in the star of a cone, for diagnostics.
pub fn star_cones(f: &Fan, cone: &[usize]) -> Vec<Cone> {
    f.top_cones().iter().filter(|t| is_subset(cone, t)).cloned().collect()
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
    fn shadow_of_projective_line() {
        let s = ell_shadow(&corpus::projective_line()).unwrap();
        assert_eq!(s.rank, 2);
        assert_eq!(s.wall_spans, vec![SublatticeClass::trivial(1)]);
        assert_eq!(
            s.det_divisor,
            vec![DivisorTerm {
                class: SublatticeClass::trivial(1),
                coefficient: -1
            }]
        );
    }

    #[test]
    fn shadow_of_projective_plane() {
        let s = ell_shadow(&corpus::projective_plane()).unwrap();
        assert_eq!(s.rank, 3);
        let mut expected = vec![line(&[1, 0]), line(&[0, 1]), line(&[1, 1])];
        expected.sort();
        assert_eq!(s.wall_spans, expected);
        assert_eq!(s.det_degree(), -3);
    }

    #[test]
    fn flop_pair_differs_in_one_span() {
        let (t, t2) = corpus::example_flop_pair();
        let a = ell_shadow(&t).unwrap();
        let b = ell_shadow(&t2).unwrap();
        let (l, r) = multiset_difference(&a.wall_spans, &b.wall_spans);
        assert_eq!((l.len(), r.len()), (1, 1));
        let v = compare(&a, &b, None).unwrap();
        assert_eq!(v.outcome, Outcome::NotIsomorphic);
        assert_eq!(
            v.witness,
            Witness::SpanMismatch {
                only_left: l,
                only_right: r
            }
        );
    }

    #[test]
    fn ladders() {
        let p1 = mv_ladder(&corpus::projective_line()).unwrap();
        assert_eq!(p1.terms.len(), 2);
        assert!(p1.terms[0].summands.iter().all(|s| s.class == SublatticeClass::full(1)));
        assert_eq!(p1.terms[1].summands.len(), 1);
        assert_eq!(p1.terms[1].summands[0].class, SublatticeClass::trivial(1));

        let p2 = mv_ladder(&corpus::projective_plane()).unwrap();
        assert_eq!(p2.terms[1].summands.len(), 3);
        assert!(p2.terms[1]
            .summands
            .iter()
            .all(|s| s.class.corank() == 1 && !s.vanishes_in_codim_two));
        assert_eq!(p2.terms[2].summands.len(), 1);
        assert_eq!(p2.terms[2].summands[0].class.corank(), 2);
        assert!(p2.terms[2].summands[0].vanishes_in_codim_two);

        assert_eq!(mv_ladder(&corpus::affine(3)).unwrap().terms.len(), 1);
    }

    #[test]
    fn surface_pair_verdict() {
        let (x, x2) = corpus::surface_pair();
        let v = compare_fans(&x, &x2).unwrap();
        assert_eq!(v.outcome, Outcome::Isomorphic);
        assert!(matches!(v.witness, Witness::RayBijection { ref pairs } if pairs.len() == 6));
    }

    #[test]
    fn threefold_without_sufficiency_is_unknown() {
        let (t, _) = corpus::example_flop_pair();
        let s = ell_shadow(&t).unwrap();
        assert_eq!(compare(&s, &s, None).unwrap().outcome, Outcome::Unknown);
        assert_eq!(compare_fans(&t, &t).unwrap().outcome, Outcome::Unknown);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = ell_shadow(&corpus::projective_line()).unwrap();
        let b = ell_shadow(&corpus::projective_plane()).unwrap();
        assert_eq!(compare(&a, &b, None), Err(Error::RankMismatch { left: 1, right: 2 }));
    }

    #[test]
    fn incidence_columns() {
        for f in [
            corpus::projective_plane(),
            corpus::p1_x_p1(),
            corpus::hirzebruch(1),
            corpus::surface_pair().0,
        ] {
            let a = incidence_matrix(&f, 0).unwrap();
            assert_eq!(a.matrix.rows(), a.m);
            for j in 0..a.m {
                let col = a.matrix.column(j);
                assert_eq!(col.iter().filter(|x| x.is_one()).count(), 1);
                assert_eq!(col.iter().filter(|x| **x == -BigInt::one()).count(), 1);
            }
        }
        let p2 = incidence_matrix(&corpus::projective_plane(), 0).unwrap();
        // clockwise from (1,0): (1,0), (-1,-1), (0,1)
        assert_eq!(p2.ray_order, vec![0, 2, 1]);
        assert_eq!(
            p2.matrix,
            IntMatrix::from_rows(&[vec![1, 1, 0], vec![0, -1, 1], vec![-1, 0, -1]])
        );
        assert_eq!(incidence_matrix(&corpus::affine(2), 0), Err(Error::NotProper));
        assert_eq!(incidence_matrix(&corpus::affine(3), 0), Err(Error::NotSurface(3)));
    }

    #[test]
    fn certificates() {
        let p2 = corpus::projective_plane();
        let id = flip_certificate(&p2, &p2).unwrap();
        assert_eq!(id.matrix, IntMatrix::identity(3));

        let (x, x2) = corpus::surface_pair();
        let cert = flip_certificate(&x, &x2).unwrap();
        assert!(cert.verify());
        assert!(cert.matrix.determinant().unwrap().abs().is_one());
        let back = flip_certificate_from(&cert.target, &x2, &x).unwrap();
        let round = cert.compose(&back).unwrap();
        assert!(round.verify());

        assert!(matches!(
            flip_certificate(&p2, &corpus::p1_x_p1()),
            Err(Error::NotSingleFlip(_))
        ));
    }
}
