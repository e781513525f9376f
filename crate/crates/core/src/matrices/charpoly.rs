use super::{Polynomial, SquareMatrix};
use crate::rings::RingElement;

/// Berkowitz's division-free characteristic polynomial.
///
/// Works through the leading principal submatrices. At step `r` the Toeplitz
/// column `[1, -a_rr, -R S, -R M S, ..., -R M^(r-1) S]` multiplies the previous
/// coefficient vector (highest degree first).
pub(crate) fn berkowitz(a: &SquareMatrix) -> Polynomial {
    let ring = a.ring();
    let n = a.dim();
    let mut poly: Vec<RingElement> = vec![ring.one(), ring.neg(a.get(0, 0))];

    for r in 1..n {
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(ring.one());
        toeplitz.push(ring.neg(a.get(r, r)));

        // v = M^i S for i = 0.., where M is the leading r x r block.
        let mut v: Vec<RingElement> = (0..r).map(|i| a.get(i, r).clone()).collect();
        for _ in 0..r {
            let rs = (0..r).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(a.get(r, j), &v[j])));
            toeplitz.push(ring.neg(&rs));
            v = (0..r)
                .map(|i| (0..r).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(a.get(i, j), &v[j]))))
                .collect();
        }

        let next = (0..r + 2)
            .map(|i| {
                (0..=i.min(r)).fold(ring.zero(), |acc, j| ring.add(&acc, &ring.mul(&toeplitz[i - j], &poly[j])))
            })
            .collect();
        poly = next;
    }

    poly.reverse();
    Polynomial::new(ring, poly)
}
