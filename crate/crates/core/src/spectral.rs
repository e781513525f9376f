//! Spectral idempotents as explicit polynomials in a matrix, and the
//! generalized Drazin inverse over fields.

use crate::error::{Error, Result};
use crate::matrices::{in_double_commutant, Polynomial, SquareMatrix};
use crate::rings::{RingDescriptor, RingElement};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralSplit {
    pub at: RingElement,
    /// `e(A)`: zero on the generalized `at`-eigenspace, identity on the rest.
    pub projector: SquareMatrix,
    pub multiplicity: usize,
    /// The certifying polynomial `e(t)`.
    pub polynomial: Polynomial,
}

impl SpectralSplit {
    /// `I - projector`: the projector onto the generalized `at`-eigenspace.
    pub fn eigen_projector(&self) -> SquareMatrix {
        &SquareMatrix::identity(self.projector.ring(), self.projector.dim()) - &self.projector
    }
}

fn require_field(ring: RingDescriptor) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("spectral methods need a field, got {ring}")))
    }
}

/// `chi = (t - at)^r * g` with `g(at) != 0`.
pub fn split_char_poly(chi: &Polynomial, at: &RingElement) -> (usize, Polynomial) {
    let linear = Polynomial::linear_root(chi.ring(), at);
    let mut g = chi.clone();
    let mut r = 0;
    while !g.is_zero() {
        let (q, rem) = g.div_rem(&linear).expect("monic divisor");
        if !rem.is_zero() {
            break;
        }
        g = q;
        r += 1;
    }
    (r, g)
}

pub fn spectral_idempotent(a: &SquareMatrix, at: &RingElement) -> Result<SpectralSplit> {
    let ring = a.ring();
    require_field(ring)?;
    let chi = a.char_poly();
    let (r, g) = split_char_poly(&chi, at);
    let polynomial = if r == 0 {
        Polynomial::one(ring)
    } else if g.is_constant() {
        Polynomial::zero(ring)
    } else {
        let f = Polynomial::linear_root(ring, at).pow(r as u32);
        let (gcd, s, _) = f.extended_gcd(&g).expect("field coefficients");
        debug_assert_eq!(gcd, Polynomial::one(ring));
        let (_, e) = s.mul(&f).div_rem(&chi).expect("monic characteristic polynomial");
        e
    };
    let projector = polynomial.eval_matrix(a);
    debug_assert!(projector.is_idempotent() && projector.commutes_with(a));
    Ok(SpectralSplit { at: at.clone(), projector, multiplicity: r, polynomial })
}

/// `A^d = (A + Q)^-1 (I - Q)` with `Q` the projector onto the generalized
/// null space. Axioms are re-checked before returning.
pub fn drazin_field(a: &SquareMatrix) -> Result<SquareMatrix> {
    let ring = a.ring();
    require_field(ring)?;
    let split = spectral_idempotent(a, &ring.zero())?;
    let q = split.eigen_projector();
    let inv = (a + &q)
        .try_inverse()
        .ok_or_else(|| Error::AxiomViolation("A + Q is singular".into()))?;
    let d = &inv * &split.projector;

    if &(&d * a) * &d != d {
        return Err(Error::AxiomViolation("Drazin: bab != b".into()));
    }
    if !in_double_commutant(&d, a)? {
        return Err(Error::AxiomViolation("Drazin: b not in comm^2(a)".into()));
    }
    if !(a - &(&(a * a) * &d)).is_nilpotent() {
        return Err(Error::AxiomViolation("Drazin: a - a^2 b not nilpotent".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: RingDescriptor = RingDescriptor::Rationals;

    fn q(n: i64, d: i64) -> RingElement {
        Q.element(num_rational::BigRational::new(n.into(), d.into())).unwrap()
    }

    #[test]
    fn splitting() {
        let (r, g) = split_char_poly(&Polynomial::from_i64(Q, &[0, -1, 1]), &Q.zero());
        assert_eq!((r, g), (1, Polynomial::from_i64(Q, &[-1, 1])));
        let chi = Polynomial::from_i64(Q, &[4, -29, 1]);
        assert_eq!(split_char_poly(&chi, &Q.zero()), (0, chi.clone()));
        let cube = Polynomial::from_i64(Q, &[-1, 1]).pow(3).mul(&Polynomial::from_i64(Q, &[0, 0, 1]));
        assert_eq!(split_char_poly(&cube, &Q.one()), (3, Polynomial::from_i64(Q, &[0, 0, 1])));
    }

    #[test]
    fn projectors() {
        let p = spectral_idempotent(&SquareMatrix::diag(Q, &[0, 1]), &Q.zero()).unwrap();
        assert_eq!(p.projector, SquareMatrix::diag(Q, &[0, 1]));
        let a = SquareMatrix::from_i64(Q, [[1, 1], [0, 0]]);
        assert_eq!(spectral_idempotent(&a, &Q.zero()).unwrap().projector, a);
        let p = spectral_idempotent(&SquareMatrix::diag(Q, &[2, 0]), &Q.zero()).unwrap();
        assert_eq!(p.projector, SquareMatrix::diag(Q, &[1, 0]));
        assert_eq!(p.multiplicity, 1);
    }

    #[test]
    fn drazin_examples() {
        let d = drazin_field(&SquareMatrix::diag(Q, &[2, 0])).unwrap();
        assert_eq!(d, SquareMatrix::from_fn(Q, 2, |i, j| if i == 0 && j == 0 { q(1, 2) } else { Q.zero() }));
        let e = SquareMatrix::from_i64(Q, [[1, 1], [0, 0]]);
        assert_eq!(drazin_field(&e).unwrap(), e);
        assert!(drazin_field(&SquareMatrix::from_i64(Q, [[0, 1], [0, 0]])).unwrap().is_zero());
    }

    #[test]
    fn non_field_rejected() {
        let a = SquareMatrix::identity(RingDescriptor::IntegersMod(4), 2);
        assert!(matches!(drazin_field(&a), Err(Error::Unsupported(_))));
    }

    #[test]
    fn drazin_mod_prime() {
        let f = RingDescriptor::IntegersMod(7);
        let a = SquareMatrix::from_i64(f, [[3, 1, 0], [0, 3, 0], [0, 0, 0]]);
        let d = drazin_field(&a).unwrap();
        assert_eq!(&a * &d, SquareMatrix::diag(f, &[1, 1, 0]));
        assert_eq!(&(&d * &a) * &d, d);
    }
}
