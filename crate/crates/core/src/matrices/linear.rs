//! Gaussian elimination over the field rings (`Q` and `Z/p`).

use crate::rings::{RingDescriptor, RingElement};

pub(crate) type Rows = Vec<Vec<RingElement>>;

/// Reduced row echelon form in place; returns the pivot columns.
pub(crate) fn rref(ring: RingDescriptor, rows: &mut Rows) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = ring.try_invert(&rows[r][c]).expect("field pivot");
        for x in rows[r].iter_mut() {
            *x = ring.mul(x, &inv);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for j in c..ncols {
                let delta = ring.mul(&f, &rows[r][j]);
                rows[i][j] = ring.sub(&rows[i][j], &delta);
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Basis of `{x : M x = 0}` for an `m x ncols` matrix `M`.
pub(crate) fn nullspace(ring: RingDescriptor, mut m: Rows, ncols: usize) -> Rows {
    let pivots = rref(ring, &mut m);
    let free = (0..ncols).filter(|c| !pivots.contains(c));
    free.map(|f| {
        let mut v = vec![ring.zero(); ncols];
        v[f] = ring.one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = ring.neg(&m[row][f]);
        }
        v
    })
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_rank_one() {
        let q = RingDescriptor::Rationals;
        let m = vec![vec![q.from_i64(1), q.from_i64(2), q.from_i64(3)]];
        let ns = nullspace(q, m.clone(), 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let dot = (0..3).fold(q.zero(), |acc, j| q.add(&acc, &q.mul(&m[0][j], &v[j])));
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn rref_mod_prime() {
        let f = RingDescriptor::IntegersMod(5);
        let mut m = vec![
            vec![f.from_i64(2), f.from_i64(4)],
            vec![f.from_i64(1), f.from_i64(2)],
        ];
        assert_eq!(rref(f, &mut m), vec![0]);
        assert_eq!(m[0], vec![f.one(), f.from_i64(2)]);
        assert!(m[1].iter().all(RingElement::is_zero));
    }
}
