//! Crepant resolutions of abelian quotient singularities as cones over
//! unimodular triangulations, and diagonal flips between them.
//!
//! A finite subgroup of the torus in SL is given by rational weight vectors
//! modulo ℤⁿ. The cocharacter lattice of the quotient is ℤⁿ enlarged by those
//! weights; the quotient's fan is the positive orthant, and its slice at
//! height one (sum of coordinates) is the lattice simplex Δ. Points of Δ are
//! stored in coordinates of the height-one hyperplane, normalized so that the
//! first vertex is the origin and the edge matrix is in Hermite normal form.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{self, fmt_vector, hnf_with_transform, IntMatrix, IntVector, JsonInts};

/// A cell of a triangulation: sorted point indices.
pub type Cell = Vec<usize>;

/// Finite abelian subgroup of the torus, given by generators in (ℚ/ℤ)ⁿ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    pub ambient_rank: usize,
    pub generators: Vec<Vec<BigRational>>,
}

impl GroupSpec {
    pub fn trivial(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            generators: Vec::new(),
        }
    }

    /// μ_m acting with weights (1/m, −1/m) on 𝔸².
    pub fn antidiagonal(m: i64) -> Self {
        let w = BigRational::new(BigInt::one(), BigInt::from(m));
        Self {
            ambient_rank: 2,
            generators: vec![vec![w.clone(), -w]],
        }
    }

    /// Kernel of the product map (μ₂)³ → μ₂.
    pub fn mu2_kernel() -> Self {
        Self::parse("1/2,1/2,0;1/2,0,1/2").expect("valid weights")
    }

    /// Parses generators written as `w1,w2,...;w1,w2,...` with rational entries.
    pub fn parse(text: &str) -> Result<Self> {
        let mut generators = Vec::new();
        for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let g: Result<Vec<BigRational>> = part
                .split(',')
                .map(|w| {
                    w.trim()
                        .parse::<BigRational>()
                        .map_err(|e| Error::Schema(format!("bad weight {w:?}: {e}")))
                })
                .collect();
            generators.push(g?);
        }
        let ambient_rank = generators
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::Schema("no generators given".into()))?;
        if generators.iter().any(|g| g.len() != ambient_rank) {
            return Err(Error::Schema("generators have different lengths".into()));
        }
        Ok(Self {
            ambient_rank,
            generators,
        })
    }
}

/// A lattice simplex Δ in the height-one hyperplane, with all its lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeSimplex {
    dim: usize,
    /// Indices of the vertices of Δ in `points`.
    vertices: Vec<usize>,
    #[serde(serialize_with = "serialize_points")]
    points: Vec<IntVector>,
}

fn serialize_points<S: serde::Serializer>(points: &[IntVector], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(points.len()))?;
    for p in points {
        seq.serialize_element(&JsonInts(p))?;
    }
    seq.end()
}

impl LatticeSimplex {
    /// The simplex spanned by `vertices` (dim+1 affinely independent points in ℤ^dim).
    pub fn from_vertices(vertices: &[IntVector]) -> Result<Self> {
        let dim = vertices.len().saturating_sub(1);
        if dim == 0 || vertices.iter().any(|v| v.len() != dim) {
            return Err(Error::Schema(
                "a simplex needs dim+1 points in dimension dim >= 1".into(),
            ));
        }
        let edges = edge_matrix(vertices);
        let volume = edges.determinant()?;
        if volume.is_zero() {
            return Err(Error::Schema("simplex vertices are affinely dependent".into()));
        }
        let inv = edges.to_rational().inverse().expect("nonzero determinant");
        // bounding box enumeration, membership by barycentric coordinates
        let lo: Vec<BigInt> = (0..dim)
            .map(|i| vertices.iter().map(|v| v[i].clone()).min().unwrap())
            .collect();
        let hi: Vec<BigInt> = (0..dim)
            .map(|i| vertices.iter().map(|v| v[i].clone()).max().unwrap())
            .collect();
        let mut points = Vec::new();
        let mut cur = lo.clone();
        loop {
            let rel: Vec<BigRational> = (0..dim)
                .map(|i| BigRational::from_integer(&cur[i] - &vertices[0][i]))
                .collect();
            let bary: Vec<BigRational> = (0..dim)
                .map(|r| (0..dim).map(|c| inv.get(r, c) * &rel[c]).sum())
                .collect();
            let total: BigRational = bary.iter().sum();
            if bary.iter().all(|b| !b.is_negative()) && total <= BigRational::one() {
                points.push(cur.clone());
            }
            // odometer
            let mut i = 0;
            loop {
                if i == dim {
                    points.sort();
                    let vertex_ids = vertices
                        .iter()
                        .map(|v| points.binary_search(v).expect("vertices are lattice points"))
                        .collect();
                    return Ok(Self {
                        dim,
                        vertices: vertex_ids,
                        points,
                    });
                }
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i].clone();
                i += 1;
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[IntVector] {
        &self.points
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn point_index(&self, p: &[i64]) -> Option<usize> {
        let p = lattice::int_vec(p);
        self.points.iter().position(|q| *q == p)
    }

    /// Normalized volume of Δ (number of unimodular cells in any unimodular triangulation).
    pub fn normalized_volume(&self) -> BigInt {
        self.cell_volume(&self.vertices)
    }

    pub fn cell_volume(&self, cell: &[usize]) -> BigInt {
        let pts: Vec<IntVector> = cell.iter().map(|&i| self.points[i].clone()).collect();
        edge_matrix(&pts).determinant().expect("square").abs()
    }

    /// Barycentric coordinates of a point with respect to the vertices of Δ.
    fn barycentric(&self, p: &[BigInt]) -> Vec<BigRational> {
        let verts: Vec<IntVector> = self.vertices.iter().map(|&i| self.points[i].clone()).collect();
        let inv = edge_matrix(&verts).to_rational().inverse().expect("nondegenerate");
        let rel: Vec<BigRational> = (0..self.dim)
            .map(|i| BigRational::from_integer(&p[i] - &verts[0][i]))
            .collect();
        let mut bary: Vec<BigRational> = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| inv.get(r, c) * &rel[c]).sum())
            .collect();
        let first = BigRational::one() - bary.iter().sum::<BigRational>();
        bary.insert(0, first);
        bary
    }

    pub fn is_boundary_point(&self, i: usize) -> bool {
        self.barycentric(&self.points[i]).iter().any(Zero::is_zero)
    }

    pub fn interior_points(&self) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| !self.is_boundary_point(i)).collect()
    }

    pub fn boundary_points(&self) -> Vec<usize> {
        (0..self.points.len()).filter(|&i| self.is_boundary_point(i)).collect()
    }

    /// True if all given points lie on a common facet of Δ.
    fn on_common_facet(&self, ids: &[usize]) -> bool {
        let bary: Vec<Vec<BigRational>> = ids.iter().map(|&i| self.barycentric(&self.points[i])).collect();
        (0..=self.dim).any(|k| bary.iter().all(|b| b[k].is_zero()))
    }

    /// The ray of the cone over Δ through point `i`.
    pub fn ray(&self, i: usize) -> IntVector {
        let mut r = self.points[i].clone();
        r.push(BigInt::one());
        r
    }
}

/// The lattice simplex whose cone is the fan of 𝔸ⁿ/G.
pub fn quotient_simplex(group: &GroupSpec) -> Result<LatticeSimplex> {
    let n = group.ambient_rank;
    if n < 2 {
        return Err(Error::Schema("quotient simplices need ambient rank >= 2".into()));
    }
    for g in &group.generators {
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.len(),
            });
        }
        let sum: BigRational = g.iter().sum();
        if !sum.is_integer() {
            return Err(Error::NotInSL(sum.to_string()));
        }
    }
    let denom = group
        .generators
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, w| acc.lcm(w.denom()));
    // rows generating denom·N inside ℤⁿ
    let mut gens: Vec<IntVector> = (0..n)
        .map(|i| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = denom.clone();
            v
        })
        .collect();
    for g in &group.generators {
        gens.push(
            g.iter()
                .map(|w| (w * BigRational::from_integer(denom.clone())).to_integer())
                .collect(),
        );
    }
    let h = lattice::hnf(&IntMatrix::from_big_rows(&gens, n));
    let basis = IntMatrix::from_big_rows(&h.row_vectors()[..n], n);
    let basis_t_inv = basis.transpose().to_rational().inverse().expect("full rank");

    // height in lattice coordinates
    let eta: IntVector = (0..n)
        .map(|i| {
            let s: BigInt = basis.row(i).iter().sum();
            debug_assert!((&s % &denom).is_zero());
            s / &denom
        })
        .collect();
    let (_, u) = hnf_with_transform(&IntMatrix::from_columns(std::slice::from_ref(&eta), n));
    // rows of u: u_0 with η·u_0 = ±1, the rest span ker η
    let mut adapted = u.clone();
    let eta_u0 = lattice::dot(&eta, u.row(0));
    if eta_u0.is_negative() {
        for c in 0..n {
            adapted.set(0, c, -u.get(0, c));
        }
    }
    let adapted_inv = adapted.to_rational().inverse().expect("unimodular");

    // lattice points of Δ: x = k/denom with k ≥ 0 and Σk = denom
    let mut h_points = Vec::new();
    let d = denom.clone();
    for k in compositions(&d, n) {
        let kk: Vec<BigRational> = k.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        let y: Vec<BigRational> = (0..n)
            .map(|r| (0..n).map(|c| basis_t_inv.get(r, c) * &kk[c]).sum())
            .collect();
        if !y.iter().all(BigRational::is_integer) {
            continue;
        }
        let z: Vec<BigRational> = (0..n)
            .map(|c| (0..n).map(|r| &y[r] * adapted_inv.get(r, c)).sum())
            .collect();
        debug_assert!(z[0].is_one());
        let vertex = k.iter().position(|x| *x == d);
        h_points.push((
            z[1..].iter().map(BigRational::to_integer).collect::<IntVector>(),
            vertex,
        ));
    }
    let mut vertices: Vec<(usize, IntVector)> =
        h_points.iter().filter_map(|(p, v)| v.map(|i| (i, p.clone()))).collect();
    vertices.sort();
    let vertices: Vec<IntVector> = vertices.into_iter().map(|(_, p)| p).collect();

    // normalize: first vertex at the origin, edge matrix in Hermite normal form
    let edges = edge_matrix(&vertices);
    let (_, a) = hnf_with_transform(&edges);
    let normalize = |p: &IntVector| -> IntVector {
        let rel: IntVector = p.iter().zip(&vertices[0]).map(|(x, y)| x - y).collect();
        a.apply(&rel).expect("dimensions agree")
    };
    let norm_vertices: Vec<IntVector> = vertices.iter().map(normalize).collect();
    let simplex = LatticeSimplex::from_vertices(&norm_vertices)?;
    debug_assert_eq!(simplex.points.len(), h_points.len());
    Ok(simplex)
}

/// Matrix whose columns are `p_i − p_0`.
fn edge_matrix(points: &[IntVector]) -> IntMatrix {
    let dim = points[0].len();
    let cols: Vec<IntVector> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(x, y)| x - y).collect())
        .collect();
    IntMatrix::from_columns(&cols, dim)
}

fn compositions(total: &BigInt, parts: usize) -> Vec<IntVector> {
    if parts == 1 {
        return vec![vec![total.clone()]];
    }
    let mut out = Vec::new();
    let mut first = BigInt::zero();
    while &first <= total {
        for mut rest in compositions(&(total - &first), parts - 1) {
            rest.insert(0, first.clone());
            out.push(rest);
        }
        first += 1;
    }
    out
}

/// A triangulation of a lattice simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Triangulation {
    simplex: LatticeSimplex,
    cells: Vec<Cell>,
}

impl Triangulation {
    /// Checks that the cells are full-dimensional simplices on the lattice
    /// points of Δ that tile it.
    pub fn new(simplex: LatticeSimplex, cells: Vec<Cell>) -> Result<Self> {
        let d = simplex.dim;
        let mut normalized = Vec::with_capacity(cells.len());
        for mut cell in cells {
            cell.sort_unstable();
            cell.dedup();
            if cell.len() != d + 1 || cell.iter().any(|&i| i >= simplex.points.len()) {
                return Err(Error::InvalidTriangulation(format!(
                    "cell {cell:?} is not a {d}-simplex on Δ"
                )));
            }
            if simplex.cell_volume(&cell).is_zero() {
                return Err(Error::InvalidTriangulation(format!("cell {cell:?} is degenerate")));
            }
            normalized.push(cell);
        }
        normalized.sort();
        normalized.dedup();
        let total: BigInt = normalized.iter().map(|c| simplex.cell_volume(c)).sum();
        if total != simplex.normalized_volume() {
            return Err(Error::InvalidTriangulation(format!(
                "cell volumes sum to {total}, Δ has volume {}",
                simplex.normalized_volume()
            )));
        }
        // every facet is on ∂Δ or shared by two cells on opposite sides
        let mut facets: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        for cell in &normalized {
            for skip in 0..cell.len() {
                let facet: Cell = cell
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &p)| p)
                    .collect();
                facets.entry(facet).or_default().push(cell[skip]);
            }
        }
        for (facet, apexes) in &facets {
            let ok = match apexes.as_slice() {
                [_] => simplex.on_common_facet(facet),
                [a, b] => side(&simplex, facet, *a) != side(&simplex, facet, *b),
                _ => false,
            };
            if !ok {
                return Err(Error::InvalidTriangulation(format!(
                    "facet {facet:?} is not properly shared"
                )));
            }
        }
        Ok(Self {
            simplex,
            cells: normalized,
        })
    }

    pub fn simplex(&self) -> &LatticeSimplex {
        &self.simplex
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn is_unimodular(&self) -> bool {
        self.cells.iter().all(|c| self.simplex.cell_volume(c).is_one())
    }

    /// Every lattice point of Δ is a vertex of some cell.
    pub fn uses_all_points(&self) -> bool {
        let used: BTreeSet<usize> = self.cells.iter().flatten().copied().collect();
        used.len() == self.simplex.points.len()
    }

    /// Edges shared by two cells (only meaningful in dimension 2).
    fn interior_edges(&self) -> Vec<(Cell, [usize; 2])> {
        let mut edges: BTreeMap<Cell, Vec<usize>> = BTreeMap::new();
        for cell in &self.cells {
            for skip in 0..cell.len() {
                let e: Cell = cell
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &p)| p)
                    .collect();
                edges.entry(e).or_default().push(cell[skip]);
            }
        }
        edges
            .into_iter()
            .filter_map(|(e, apexes)| (apexes.len() == 2).then(|| (e, [apexes[0], apexes[1]])))
            .collect()
    }
}

fn side(simplex: &LatticeSimplex, facet: &[usize], apex: usize) -> i32 {
    let mut pts: Vec<IntVector> = facet.iter().map(|&i| simplex.points[i].clone()).collect();
    pts.push(simplex.points[apex].clone());
    let det = edge_matrix(&pts).determinant().expect("square");
    det.signum().try_into().unwrap_or(0)
}

/// The fan of cones over the cells of a unimodular triangulation.
pub fn cone_fan(t: &Triangulation) -> Result<Fan> {
    if let Some(bad) = t.cells.iter().find(|c| !t.simplex.cell_volume(c).is_one()) {
        return Err(Error::NotUnimodular(bad.clone()));
    }
    let rays = (0..t.simplex.points.len()).map(|i| t.simplex.ray(i)).collect();
    Fan::from_maximal(t.simplex.dim + 1, rays, t.cells.iter().cloned())
}

/// Replacing one diagonal of a unit quadrilateral by the other.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FlipMove {
    pub cells_before: [Cell; 2],
    pub diagonal_before: [usize; 2],
    pub diagonal_after: [usize; 2],
    pub cells_after: [Cell; 2],
}

/// All diagonal flips of a triangulated polygon that keep every cell unimodular.
pub fn flips(t: &Triangulation) -> Result<Vec<FlipMove>> {
    if t.simplex.dim != 2 {
        return Err(Error::NotDim2(t.simplex.dim));
    }
    let mut moves = Vec::new();
    for (edge, [c, d]) in t.interior_edges() {
        let (a, b) = (edge[0], edge[1]);
        // convex iff a and b lie strictly on opposite sides of cd
        let sa = side(&t.simplex, &[c, d], a);
        let sb = side(&t.simplex, &[c, d], b);
        if sa == 0 || sb == 0 || sa == sb {
            continue;
        }
        let mut new1 = vec![a, c, d];
        let mut new2 = vec![b, c, d];
        new1.sort_unstable();
        new2.sort_unstable();
        if !t.simplex.cell_volume(&new1).is_one() || !t.simplex.cell_volume(&new2).is_one() {
            continue;
        }
        let mut old1 = vec![a, b, c];
        let mut old2 = vec![a, b, d];
        old1.sort_unstable();
        old2.sort_unstable();
        let mut cells_before = [old1, old2];
        cells_before.sort();
        let mut cells_after = [new1, new2];
        cells_after.sort();
        moves.push(FlipMove {
            cells_before,
            diagonal_before: [a, b],
            diagonal_after: [c.min(d), c.max(d)],
            cells_after,
        });
    }
    Ok(moves)
}

/// A pair of triangulations of the same Δ together with a flip path between them.
///
/// Sharing Δ is what makes the two resolutions equivariantly derived
/// equivalent; the moves are the human-readable path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DerivedEquivalenceCertificate {
    pub simplex: LatticeSimplex,
    pub source: Vec<Cell>,
    pub target: Vec<Cell>,
    pub moves: Vec<FlipMove>,
}

impl DerivedEquivalenceCertificate {
    /// The empty certificate of a triangulation with itself.
    pub fn identity(t: &Triangulation) -> Self {
        Self {
            simplex: t.simplex.clone(),
            source: t.cells.clone(),
            target: t.cells.clone(),
            moves: Vec::new(),
        }
    }

    pub fn compose(&self, next: &DerivedEquivalenceCertificate) -> Result<Self> {
        if self.simplex != next.simplex || self.target != next.source {
            return Err(Error::IllegalFlip("certificates do not chain".into()));
        }
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(Self {
            simplex: self.simplex.clone(),
            source: self.source.clone(),
            target: next.target.clone(),
            moves,
        })
    }

    /// Replays the moves from the source and checks the target is reached.
    pub fn verify(&self) -> Result<bool> {
        let mut t = Triangulation::new(self.simplex.clone(), self.source.clone())?;
        for m in &self.moves {
            t = apply_flip(&t, m)?.0;
        }
        Ok(t.cells == self.target)
    }
}

pub fn apply_flip(t: &Triangulation, m: &FlipMove) -> Result<(Triangulation, DerivedEquivalenceCertificate)> {
    if !flips(t)?.contains(m) {
        return Err(Error::IllegalFlip(format!(
            "diagonal {:?} -> {:?} is not a legal flip",
            m.diagonal_before, m.diagonal_after
        )));
    }
    let mut cells: Vec<Cell> = t
        .cells
        .iter()
        .filter(|c| !m.cells_before.contains(c))
        .cloned()
        .collect();
    cells.extend(m.cells_after.iter().cloned());
    let flipped = Triangulation::new(t.simplex.clone(), cells)?;
    let cert = DerivedEquivalenceCertificate {
        simplex: t.simplex.clone(),
        source: t.cells.clone(),
        target: flipped.cells.clone(),
        moves: vec![m.clone()],
    };
    Ok((flipped, cert))
}

/// The flip that replaces the diagonal `from` (if legal in `t`).
pub fn flip_of_diagonal(t: &Triangulation, from: [usize; 2]) -> Result<FlipMove> {
    let key = [from[0].min(from[1]), from[0].max(from[1])];
    flips(t)?
        .into_iter()
        .find(|m| m.diagonal_before == key)
        .ok_or_else(|| Error::IllegalFlip(format!("no legal flip of diagonal {key:?}")))
}

/// The unique unimodular triangulation of an interval: unit segments.
pub fn interval_triangulation(simplex: &LatticeSimplex) -> Result<Triangulation> {
    if simplex.dim != 1 {
        return Err(Error::Schema(
            "interval triangulation needs a 1-dimensional simplex".into(),
        ));
    }
    let cells = (0..simplex.points.len().saturating_sub(1))
        .map(|i| vec![i, i + 1])
        .collect();
    Triangulation::new(simplex.clone(), cells)
}

/// The two crepant resolutions of 𝔸³/G for the μ₂-kernel G, related by
/// flipping one diagonal of the unit square inside Δ, plus that flip.
pub struct FlopExample {
    pub simplex: LatticeSimplex,
    pub source: Triangulation,
    pub target: Triangulation,
    /// Replaces the diagonal (0,1)–(1,1) with (1,0)–(0,2).
    pub flip: FlipMove,
}

pub fn flop_example() -> FlopExample {
    let simplex = quotient_simplex(&GroupSpec::mu2_kernel()).expect("group is in SL");
    let idx = |p: [i64; 2]| {
        simplex
            .point_index(&p)
            .unwrap_or_else(|| panic!("point {p:?} missing from {:?}", simplex.points))
    };
    let cells =
        |tris: &[[[i64; 2]; 3]]| -> Vec<Cell> { tris.iter().map(|t| t.iter().map(|&p| idx(p)).collect()).collect() };
    let source = Triangulation::new(
        simplex.clone(),
        cells(&[
            [[0, 0], [1, 0], [0, 1]],
            [[0, 1], [1, 0], [1, 1]],
            [[0, 1], [1, 1], [0, 2]],
            [[1, 0], [2, 0], [1, 1]],
        ]),
    )
    .expect("valid triangulation");
    let target = Triangulation::new(
        simplex.clone(),
        cells(&[
            [[0, 0], [1, 0], [0, 1]],
            [[0, 1], [1, 0], [0, 2]],
            [[1, 0], [1, 1], [0, 2]],
            [[1, 0], [2, 0], [1, 1]],
        ]),
    )
    .expect("valid triangulation");
    let flip = flip_of_diagonal(&source, [idx([0, 1]), idx([1, 1])]).expect("diagonal is flippable");
    FlopExample {
        simplex,
        source,
        target,
        flip,
    }
}

pub fn describe_point(simplex: &LatticeSimplex, i: usize) -> String {
    fmt_vector(&simplex.points[i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_gives_unit_interval() {
        let s = quotient_simplex(&GroupSpec::trivial(2)).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.points().len(), 2);
        assert_eq!(s.normalized_volume(), BigInt::one());
    }

    #[test]
    fn antidiagonal_group_gives_interval_of_length_m() {
        for m in 2..6 {
            let s = quotient_simplex(&GroupSpec::antidiagonal(m)).unwrap();
            assert_eq!(s.points().len() as i64, m + 1);
            assert_eq!(s.normalized_volume(), BigInt::from(m));
            let t = interval_triangulation(&s).unwrap();
            assert!(t.is_unimodular());
            assert_eq!(t.cells().len() as i64, m);
        }
    }

    #[test]
    fn resolved_a1_surface() {
        let s = quotient_simplex(&GroupSpec::antidiagonal(2)).unwrap();
        let f = cone_fan(&interval_triangulation(&s).unwrap()).unwrap();
        assert_eq!(f.top_cones().len(), 2);
        let rays: Vec<Vec<i64>> = vec![vec![0, 1], vec![1, 1], vec![2, 1]];
        assert_eq!(
            f.rays(),
            rays.iter().map(|r| lattice::int_vec(r)).collect::<Vec<_>>().as_slice()
        );
        assert!(f.is_good());
    }

    #[test]
    fn mu2_kernel_triangle() {
        let s = quotient_simplex(&GroupSpec::mu2_kernel()).unwrap();
        let expected: Vec<IntVector> = [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1], [2, 0]]
            .iter()
            .map(|p| lattice::int_vec(p))
            .collect();
        assert_eq!(s.points(), expected.as_slice());
        assert_eq!(s.normalized_volume(), BigInt::from(4));
        assert_eq!(s.interior_points(), Vec::<usize>::new());
        assert_eq!(s.boundary_points().len(), 6);
    }

    #[test]
    fn not_in_sl() {
        let g = GroupSpec::parse("1/2,0,0").unwrap();
        assert!(matches!(quotient_simplex(&g), Err(Error::NotInSL(_))));
    }

    #[test]
    fn flop_example_flips() {
        let ex = flop_example();
        let available = flips(&ex.source).unwrap();
        assert!(available.contains(&ex.flip));
        let (t2, cert) = apply_flip(&ex.source, &ex.flip).unwrap();
        assert_eq!(t2, ex.target);
        assert!(cert.verify().unwrap());
        // involution
        let back = flip_of_diagonal(&t2, ex.flip.diagonal_after).unwrap();
        let (t3, cert2) = apply_flip(&t2, &back).unwrap();
        assert_eq!(t3, ex.source);
        let round = cert.compose(&cert2).unwrap();
        assert_eq!(round.moves.len(), 2);
        assert!(round.verify().unwrap());
        assert!(cert2.compose(&cert2).is_err());
    }

    #[test]
    fn single_cell_has_no_flips() {
        let s = LatticeSimplex::from_vertices(&[
            lattice::int_vec(&[0, 0]),
            lattice::int_vec(&[1, 0]),
            lattice::int_vec(&[0, 1]),
        ])
        .unwrap();
        let t = Triangulation::new(s, vec![vec![0, 1, 2]]).unwrap();
        assert!(flips(&t).unwrap().is_empty());
    }

    #[test]
    fn interval_has_no_flips() {
        let s = quotient_simplex(&GroupSpec::antidiagonal(2)).unwrap();
        let t = interval_triangulation(&s).unwrap();
        assert_eq!(flips(&t), Err(Error::NotDim2(1)));
    }

    #[test]
    fn non_unimodular_cell_rejected_by_cone_fan() {
        let s = quotient_simplex(&GroupSpec::antidiagonal(2)).unwrap();
        let t = Triangulation::new(s, vec![vec![0, 2]]).unwrap();
        assert!(!t.uses_all_points());
        assert_eq!(cone_fan(&t), Err(Error::NotUnimodular(vec![0, 2])));
    }

    #[test]
    fn bad_tilings_rejected() {
        let s = quotient_simplex(&GroupSpec::mu2_kernel()).unwrap();
        // overlapping cells with the right total volume
        let r = Triangulation::new(s, vec![vec![0, 1, 3], vec![0, 1, 3], vec![3, 4, 5], vec![1, 2, 4]]);
        assert!(r.is_err());
    }
}
