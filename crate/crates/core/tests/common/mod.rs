#![allow(dead_code)]

use hirano_core::{RingDescriptor, SquareMatrix};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const Q: RingDescriptor = RingDescriptor::Rationals;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_int(rng: &mut ChaCha8Rng, dim: usize, lo: i64, hi: i64) -> SquareMatrix {
    let v: Vec<i64> = (0..dim * dim).map(|_| rng.gen_range(lo..=hi)).collect();
    SquareMatrix::from_fn(Q, dim, |i, j| Q.from_i64(v[i * dim + j]))
}

/// A product of elementary matrices, so integral with integral inverse.
pub fn unimodular(rng: &mut ChaCha8Rng, dim: usize) -> (SquareMatrix, SquareMatrix) {
    let mut p = SquareMatrix::identity(Q, dim);
    if dim > 1 {
        for _ in 0..2 * dim {
            let i = rng.gen_range(0..dim);
            let mut j = rng.gen_range(0..dim - 1);
            if j >= i {
                j += 1;
            }
            let c = rng.gen_range(-2..=2);
            let e = SquareMatrix::from_fn(Q, dim, |r, s| {
                Q.from_i64(if r == s {
                    1
                } else if (r, s) == (i, j) {
                    c
                } else {
                    0
                })
            });
            p = &p * &e;
        }
    }
    let inv = p.try_inverse().expect("unimodular");
    (p, inv)
}

/// Block diagonal Jordan form with the given eigenvalues; each eigenvalue
/// opens a new block or, with probability 1/2, extends the previous one.
pub fn jordan(rng: &mut ChaCha8Rng, eigen: &[i64]) -> SquareMatrix {
    let dim = eigen.len();
    let mut sup = vec![false; dim];
    for k in 1..dim {
        sup[k] = eigen[k] == eigen[k - 1] && rng.gen_bool(0.5);
    }
    SquareMatrix::from_fn(Q, dim, |i, j| {
        Q.from_i64(if i == j {
            eigen[i]
        } else if j == i + 1 && sup[j] {
            1
        } else {
            0
        })
    })
}

pub fn conjugate(rng: &mut ChaCha8Rng, m: &SquareMatrix) -> SquareMatrix {
    let (p, inv) = unimodular(rng, m.dim());
    &(&p * m) * &inv
}

/// Mostly matrices whose eigenvalues come from `pool`, sometimes fully random.
pub fn spectral_sample(rng: &mut ChaCha8Rng, dim: usize, pool: &[i64]) -> SquareMatrix {
    if rng.gen_bool(0.3) {
        return random_int(rng, dim, -3, 3);
    }
    let mut eigen: Vec<i64> = (0..dim).map(|_| *pool.choose(rng).unwrap()).collect();
    eigen.sort();
    let j = jordan(rng, &eigen);
    conjugate(rng, &j)
}

pub fn poly_in(m: &SquareMatrix, coeffs: &[i64]) -> SquareMatrix {
    let mut acc = SquareMatrix::zero(m.ring(), m.dim());
    for &c in coeffs.iter().rev() {
        acc = &(&acc * m) + &SquareMatrix::identity(m.ring(), m.dim()).scale(&m.ring().from_i64(c));
    }
    acc
}

/// Direct-sum style block matrix `[[a, b], [c, d]]`.
pub fn blocks(a: &SquareMatrix, b: &[Vec<i64>], c: &[Vec<i64>], d: &SquareMatrix) -> SquareMatrix {
    let (k, l) = (a.dim(), d.dim());
    SquareMatrix::from_fn(Q, k + l, |i, j| match (i < k, j < k) {
        (true, true) => a.get(i, j).clone(),
        (true, false) => Q.from_i64(b[i][j - k]),
        (false, true) => Q.from_i64(c[i - k][j]),
        (false, false) => d.get(i - k, j - k).clone(),
    })
}

pub fn int_block(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Vec<Vec<i64>> {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect()
}

pub fn zeros(rows: usize, cols: usize) -> Vec<Vec<i64>> {
    vec![vec![0; cols]; rows]
}

/// Strictly upper triangular, hence nilpotent.
pub fn strict_upper(rng: &mut ChaCha8Rng, dim: usize) -> SquareMatrix {
    SquareMatrix::from_fn(Q, dim, |i, j| Q.from_i64(if j > i { rng.gen_range(-2..=2) } else { 0 }))
}

/// Integer matrix power, independent of the library.
pub fn imul(a: &[[i64; 2]; 2], b: &[[i64; 2]; 2]) -> [[i64; 2]; 2] {
    let mut c = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    c
}

pub fn nilpotent_by_power(m: &SquareMatrix) -> bool {
    m.pow(m.dim() as u32).is_zero()
}
