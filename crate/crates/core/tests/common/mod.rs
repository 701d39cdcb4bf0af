#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use toric_ell::fan::Fan;
use toric_ell::lattice::{int_vec, IntMatrix};
use toric_ell::rational::RatMatrix;

/// Smooth complete surface from rays listed counterclockwise.
pub fn cyclic_surface(rays: &[[i64; 2]]) -> Fan {
    let n = rays.len();
    let rays: Vec<Vec<i64>> = rays.iter().map(|r| r.to_vec()).collect();
    let cones: Vec<Vec<usize>> = (0..n).map(|i| vec![i, (i + 1) % n]).collect();
    Fan::from_i64(2, &rays, &cones).expect("cyclic ray list is a fan")
}

/// Two surfaces sharing every ray but one, which is reversed.
///
/// A random sequence of blow-ups of ℙ¹×ℙ¹ gives a base B; if B has cones
/// (u,w) and (p,q) with u+w = −(p+q), blowing up one or the other gives the
/// pair.
pub fn random_reversal_pair<R: Rng>(rng: &mut R) -> (Fan, Fan) {
    loop {
        let mut rays: Vec<[i64; 2]> = vec![[1, 0], [0, 1], [-1, 0], [0, -1]];
        for _ in 0..rng.gen_range(0..5) {
            let i = rng.gen_range(0..rays.len());
            let (u, w) = (rays[i], rays[(i + 1) % rays.len()]);
            rays.insert(i + 1, [u[0] + w[0], u[1] + w[1]]);
        }
        let n = rays.len();
        let sums: Vec<[i64; 2]> = (0..n)
            .map(|i| [rays[i][0] + rays[(i + 1) % n][0], rays[i][1] + rays[(i + 1) % n][1]])
            .collect();
        let mut candidates = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if sums[i][0] == -sums[j][0] && sums[i][1] == -sums[j][1] {
                    candidates.push((i, j));
                }
            }
        }
        let Some(&(i, j)) = candidates.choose(rng) else {
            continue;
        };
        let mut x = rays.clone();
        x.insert(i + 1, sums[i]);
        let mut x2 = rays;
        x2.insert(j + 1, sums[j]);
        return (
            shuffle_fan(&cyclic_surface(&x), rng),
            shuffle_fan(&cyclic_surface(&x2), rng),
        );
    }
}

/// The same fan with rays renumbered and cones handed over in a random order.
pub fn shuffle_fan<R: Rng>(f: &Fan, rng: &mut R) -> Fan {
    let mut perm: Vec<usize> = (0..f.rays().len()).collect();
    perm.shuffle(rng);
    let mut rays = vec![Vec::new(); perm.len()];
    for (i, r) in f.rays().iter().enumerate() {
        rays[perm[i]] = r.clone();
    }
    let mut cones: Vec<Vec<usize>> = f
        .maximal_cones()
        .iter()
        .map(|c| {
            let mut c: Vec<usize> = c.iter().map(|&i| perm[i]).collect();
            c.shuffle(rng);
            c
        })
        .collect();
    cones.shuffle(rng);
    Fan::from_maximal(f.ambient_rank(), rays, cones).expect("relabelled fan")
}

/// Product of random elementary matrices.
pub fn random_unimodular<R: Rng>(n: usize, rng: &mut R) -> IntMatrix {
    let mut rows: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    if n < 2 {
        return IntMatrix::from_rows(&rows);
    }
    for _ in 0..3 * n {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if a == b {
            continue;
        }
        let k = rng.gen_range(-2..=2);
        let src = rows[b].clone();
        for (x, y) in rows[a].iter_mut().zip(src) {
            *x += k * y;
        }
    }
    IntMatrix::from_rows(&rows)
}

/// Rank by plain fraction-free elimination, independent of the library.
pub fn oracle_rank(m: &RatMatrix) -> usize {
    let mut a: Vec<Vec<BigRational>> = (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols() {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..a.len() {
            if r != rank && !a[r][col].is_zero() {
                let factor = a[r][col].clone() / a[rank][col].clone();
                let pivot_row = a[rank].clone();
                for (x, y) in a[r].iter_mut().zip(pivot_row).skip(col) {
                    *x -= y * factor.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Homology ranks by rank–nullity.
pub fn oracle_homology(dims: &[usize], ds: &[RatMatrix]) -> Vec<usize> {
    (0..dims.len())
        .map(|k| {
            let out = if k < ds.len() { oracle_rank(&ds[k]) } else { 0 };
            let inc = if k > 0 { oracle_rank(&ds[k - 1]) } else { 0 };
            dims[k] - out - inc
        })
        .collect()
}

/// Cofactor expansion, for small matrices only.
pub fn cofactor_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut total = BigInt::zero();
    for j in 0..n {
        let minor: Vec<Vec<i64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let term = BigInt::from(m[0][j]) * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn is_unit(x: &BigInt) -> bool {
    x.abs().is_one()
}

pub fn vec2(v: [i64; 2]) -> Vec<BigInt> {
    int_vec(&v)
}

/// A random exact complex: a direct sum of unit blocks K → B and homology
/// summands, scaled and conjugated by random unimodular changes of basis.
pub fn random_complex<R: Rng>(rng: &mut R) -> (Vec<usize>, Vec<RatMatrix>) {
    let len = rng.gen_range(2..=5);
    let homology: Vec<usize> = (0..len).map(|_| rng.gen_range(0..3)).collect();
    let ranks: Vec<usize> = (0..len - 1).map(|_| rng.gen_range(0..4)).collect();
    let dims: Vec<usize> = (0..len)
        .map(|k| homology[k] + ranks.get(k).copied().unwrap_or(0) + if k > 0 { ranks[k - 1] } else { 0 })
        .collect();
    // basis of C^k: [B^k (image of K^{k-1}) | H^k | K^k]
    let gs: Vec<IntMatrix> = dims.iter().map(|&n| random_unimodular(n, rng)).collect();
    let ds = (0..len - 1)
        .map(|k| {
            let mut d = RatMatrix::zeros(dims[k + 1], dims[k]);
            let k_start = dims[k] - ranks[k];
            for j in 0..ranks[k] {
                let scale = BigRational::new(
                    BigInt::from(rng.gen_range(1..5) * if rng.gen() { 1 } else { -1 }),
                    BigInt::from(rng.gen_range(1..4)),
                );
                d.set(j, k_start + j, scale);
            }
            let g_inv = RatMatrix::from_int(&gs[k]).inverse().expect("unimodular");
            RatMatrix::from_int(&gs[k + 1])
                .mul(&d)
                .and_then(|x| x.mul(&g_inv))
                .expect("shapes agree")
        })
        .collect();
    (dims, ds)
}

/// Index sets `(k_source, k_target)` on which `d` restricts to an invertible
/// square block; random small blocks are tried before a full pivot block.
pub fn random_unit_block<R: Rng>(d: &RatMatrix, rng: &mut R) -> Option<(Vec<usize>, Vec<usize>)> {
    let r = oracle_rank(d);
    if r == 0 {
        return None;
    }
    let cols: Vec<usize> = (0..d.cols()).collect();
    let rows: Vec<usize> = (0..d.rows()).collect();
    for _ in 0..40 {
        let s = rng.gen_range(1..=r);
        let mut src: Vec<usize> = cols.choose_multiple(rng, s).copied().collect();
        let mut tgt: Vec<usize> = rows.choose_multiple(rng, s).copied().collect();
        src.sort_unstable();
        tgt.sort_unstable();
        if oracle_rank(&d.select(&tgt, &src)) == s {
            return Some((src, tgt));
        }
    }
    let (_, src) = d.rref();
    let (_, tgt) = d.transpose().rref();
    Some((src, tgt))
}
