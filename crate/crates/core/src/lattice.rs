//! Exact integer linear algebra over ℤ.
//!
//! Everything here works on [`BigInt`] entries: Hermite normal forms, integer
//! kernels, saturation of sublattices and exact determinants. A saturated
//! sublattice is represented canonically by [`SublatticeClass`], whose basis is
//! the row Hermite normal form of any basis, so structural equality of classes
//! is equality of sublattices.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::rational::RatMatrix;

/// A vector in ℤⁿ.
pub type IntVector = Vec<BigInt>;

/// Converts a slice of machine integers into an [`IntVector`].
pub fn int_vec(v: &[i64]) -> IntVector {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Dense integer matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows of machine integers. Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let big: Vec<IntVector> = rows.iter().map(|r| int_vec(r)).collect();
        Self::from_big_rows(&big, rows.first().map_or(0, |r| r.len()))
    }

    /// Builds a matrix whose rows are the given vectors, each of length `cols`.
    pub fn from_big_rows(rows: &[IntVector], cols: usize) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            entries.extend(r.iter().cloned());
        }
        Self {
            rows: rows.len(),
            cols,
            entries,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[IntVector], rows: usize) -> Self {
        Self::from_big_rows(columns, rows).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> IntVector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.entries[idx] += a * other.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[BigInt]) -> Result<IntVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Entries as machine integers, if every entry fits.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(ToPrimitive::to_i64).collect())
            .collect()
    }

    pub fn to_rational(&self) -> RatMatrix {
        RatMatrix::from_int(self)
    }

    pub fn determinant(&self) -> Result<BigInt> {
        determinant(self)
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(determinant(self), Ok(d) if d.abs().is_one())
    }

    /// Exact inverse, if the matrix is unimodular.
    pub fn unimodular_inverse(&self) -> Option<IntMatrix> {
        if !self.is_unimodular() {
            return None;
        }
        self.to_rational().inverse()?.to_integer()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// row[target] -= q * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let delta = q * &self.entries[source * self.cols + c];
            self.entries[target * self.cols + c] -= delta;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let idx = r * self.cols + c;
            self.entries[idx] = -std::mem::take(&mut self.entries[idx]);
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (c, x) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.rows))?;
        for r in 0..self.rows {
            seq.serialize_element(&JsonInts(self.row(r)))?;
        }
        seq.end()
    }
}

/// Serializes integers as JSON numbers when they fit in `i64` and as decimal
/// strings otherwise.
pub struct JsonInts<'a>(pub &'a [BigInt]);

impl Serialize for JsonInts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in self.0 {
            match x.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&x.to_string())?,
            }
        }
        seq.end()
    }
}

/// Formats an integer vector as `(a,b,c)`.
pub fn fmt_vector(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Row-style Hermite normal form.
///
/// The result has the same shape as the input, zero rows at the bottom,
/// positive pivots, and entries above each pivot reduced into `[0, pivot)`.
pub fn hnf(m: &IntMatrix) -> IntMatrix {
    hnf_with_transform(m).0
}

/// Returns `(h, u)` with `u` unimodular and `u * m = h` in Hermite normal form.
pub fn hnf_with_transform(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut pivot_row = 0;
    for col in 0..h.cols {
        if pivot_row == h.rows {
            break;
        }
        let mut found = false;
        loop {
            let best = (pivot_row..h.rows)
                .filter(|&r| !h.get(r, col).is_zero())
                .min_by(|&a, &b| h.get(a, col).abs().cmp(&h.get(b, col).abs()));
            let Some(best) = best else { break };
            found = true;
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            let mut clean = true;
            for r in pivot_row + 1..h.rows {
                if h.get(r, col).is_zero() {
                    continue;
                }
                let q = h.get(r, col).div_floor(h.get(pivot_row, col));
                h.sub_row_multiple(r, pivot_row, &q);
                u.sub_row_multiple(r, pivot_row, &q);
                if !h.get(r, col).is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !found {
            continue;
        }
        if h.get(pivot_row, col).is_negative() {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        for r in 0..pivot_row {
            let q = h.get(r, col).div_floor(h.get(pivot_row, col));
            h.sub_row_multiple(r, pivot_row, &q);
            u.sub_row_multiple(r, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, u)
}

/// Number of nonzero rows of the Hermite normal form, i.e. the rank.
pub fn rank(m: &IntMatrix) -> usize {
    let h = hnf(m);
    (0..h.rows).filter(|&r| h.row(r).iter().any(|x| !x.is_zero())).count()
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt> {
    if m.rows != m.cols {
        return Err(Error::NonSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1))
}

/// Basis (as rows) of the integer kernel `{x ∈ ℤⁿ : m·x = 0}`.
///
/// The returned basis spans a saturated sublattice of ℤⁿ.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, u) = hnf_with_transform(&m.transpose());
    let zero_rows: Vec<IntVector> = (0..h.rows)
        .filter(|&r| h.row(r).iter().all(Zero::is_zero))
        .map(|r| u.row(r).to_vec())
        .collect();
    IntMatrix::from_big_rows(&zero_rows, m.cols)
}

/// Divides a vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> IntVector {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

pub fn is_primitive(v: &[BigInt]) -> bool {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).is_one()
}

/// Flips the sign so that the first nonzero coordinate is positive.
pub fn canonical_sign(v: &[BigInt]) -> IntVector {
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.iter().map(|y| -y).collect(),
        _ => v.to_vec(),
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Canonical representative of a saturated sublattice of ℤⁿ.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SublatticeClass {
    ambient_rank: usize,
    basis: IntMatrix,
}

impl SublatticeClass {
    /// The zero sublattice of ℤⁿ.
    pub fn trivial(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            basis: IntMatrix::zeros(0, ambient_rank),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Self {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
        }
    }

    /// The sublattice `{x : ⟨normal, x⟩ = 0}`.
    pub fn from_normal(normal: &[BigInt]) -> Self {
        let n = normal.len();
        let m = IntMatrix::from_big_rows(&[normal.to_vec()], n);
        Self::from_saturated_basis(&integer_kernel(&m))
    }

    fn from_saturated_basis(basis: &IntMatrix) -> Self {
        let h = hnf(basis);
        let rows: Vec<IntVector> = (0..h.rows)
            .filter(|&r| h.row(r).iter().any(|x| !x.is_zero()))
            .map(|r| h.row(r).to_vec())
            .collect();
        Self {
            ambient_rank: basis.cols,
            basis: IntMatrix::from_big_rows(&rows, basis.cols),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn corank(&self) -> usize {
        self.ambient_rank - self.rank()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        if v.len() != self.ambient_rank {
            return false;
        }
        let normals = integer_kernel(&self.basis);
        (0..normals.rows).all(|r| dot(normals.row(r), v).is_zero())
    }

    /// Primitive covector cutting out a corank-1 class, first nonzero entry positive.
    pub fn primitive_normal(&self) -> Result<IntVector> {
        if self.corank() != 1 {
            return Err(Error::WrongCorank {
                expected: 1,
                found: self.corank(),
            });
        }
        let k = integer_kernel(&self.basis);
        Ok(canonical_sign(&primitive(k.row(0))))
    }

    /// Image under a lattice automorphism `g` acting on column vectors.
    pub fn transform(&self, g: &IntMatrix) -> Result<Self> {
        let image: Result<Vec<IntVector>> = self.basis.row_vectors().iter().map(|v| g.apply(v)).collect();
        saturate(&image?, self.ambient_rank)
    }
}

impl fmt::Debug for SublatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SublatticeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.rank() {
            0 => write!(f, "0<Z^{}>", self.ambient_rank),
            r if r == self.ambient_rank => write!(f, "Z^{}", self.ambient_rank),
            1 => write!(f, "Z{}", fmt_vector(self.basis.row(0))),
            _ => {
                let parts: Vec<String> = self.basis.row_vectors().iter().map(|v| fmt_vector(v)).collect();
                write!(f, "span{{{}}}", parts.join(","))
            }
        }
    }
}

impl Serialize for SublatticeClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SublatticeClass", 4)?;
        st.serialize_field("ambient_rank", &self.ambient_rank)?;
        st.serialize_field("rank", &self.rank())?;
        st.serialize_field("basis", &self.basis)?;
        match self.primitive_normal() {
            Ok(n) => st.serialize_field("normal", &JsonInts(&n))?,
            Err(_) => st.serialize_field("normal", &Option::<()>::None)?,
        }
        st.end()
    }
}

/// Smallest saturated sublattice of ℤⁿ containing the given vectors.
pub fn saturate(vectors: &[IntVector], ambient_rank: usize) -> Result<SublatticeClass> {
    if let Some(v) = vectors.iter().find(|v| v.len() != ambient_rank) {
        return Err(Error::DimensionMismatch {
            expected: ambient_rank,
            found: v.len(),
        });
    }
    if vectors.iter().all(|v| v.iter().all(Zero::is_zero)) {
        return Ok(SublatticeClass::trivial(ambient_rank));
    }
    let m = IntMatrix::from_big_rows(vectors, ambient_rank);
    let annihilator = integer_kernel(&m);
    if annihilator.rows() == 0 {
        return Ok(SublatticeClass::full(ambient_rank));
    }
    Ok(SublatticeClass::from_saturated_basis(&integer_kernel(&annihilator)))
}

/// True iff the vectors form a basis of ℤⁿ.
pub fn is_unimodular_basis(vectors: &[IntVector]) -> Result<bool> {
    let n = vectors.first().map_or(0, Vec::len);
    if vectors.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: vectors.len(),
        });
    }
    if let Some(v) = vectors.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let m = IntMatrix::from_big_rows(vectors, n);
    Ok(determinant(&m)?.abs().is_one())
}

/// True iff the vectors generate a saturated sublattice (they extend to a basis
/// of ℤⁿ when independent).
pub fn generates_saturated(vectors: &[IntVector], ambient_rank: usize) -> Result<bool> {
    let sat = saturate(vectors, ambient_rank)?;
    if vectors.is_empty() {
        return Ok(true);
    }
    let generated = SublatticeClass::from_saturated_basis(&IntMatrix::from_big_rows(vectors, ambient_rank));
    Ok(generated == sat)
}
