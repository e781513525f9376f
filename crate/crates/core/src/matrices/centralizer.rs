use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use super::linear::nullspace;
use super::{kernel_generators_mod, SquareMatrix};
use crate::error::Result;
use crate::rings::{RingDescriptor, RingElement};

/// Finite generating set for `comm(a)`.
#[derive(Debug, Clone)]
pub struct Centralizer {
    generators: Vec<SquareMatrix>,
}

impl Centralizer {
    pub fn of(a: &SquareMatrix) -> Result<Self> {
        Ok(Centralizer { generators: centralizer_generators(a)? })
    }

    pub fn generators(&self) -> &[SquareMatrix] {
        &self.generators
    }

    /// Membership in `comm^2(a)`.
    pub fn double_commutant_contains(&self, b: &SquareMatrix) -> bool {
        self.generators.iter().all(|y| b.commutes_with(y))
    }
}

/// Coefficient matrix of `X -> AX - XA` on `vec(X)` (row-major index `i*k+j`).
fn commutator_system(a: &SquareMatrix) -> Vec<Vec<RingElement>> {
    let (r, k) = (a.ring(), a.dim());
    let mut rows = vec![vec![r.zero(); k * k]; k * k];
    for i in 0..k {
        for j in 0..k {
            let row = &mut rows[i * k + j];
            for l in 0..k {
                // (AX)_ij picks X_lj; (XA)_ij picks X_il.
                row[l * k + j] = r.add(&row[l * k + j], a.get(i, l));
                row[i * k + l] = r.sub(&row[i * k + l], a.get(l, j));
            }
        }
    }
    rows
}

fn to_matrix(ring: RingDescriptor, k: usize, v: &[RingElement]) -> SquareMatrix {
    SquareMatrix::from_fn(ring, k, |i, j| v[i * k + j].clone())
}

/// Scales a rational vector by the lcm of its denominators.
fn clear_denominators(v: &[RingElement]) -> Vec<BigRational> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.value() * BigRational::from_integer(l.clone())).collect()
}

/// Generators of the solution module of `AX = XA`.
///
/// Fields use Gaussian elimination, composite `Z/n` uses the Howell form, and
/// `Z`, `Z_(p)` solve over `Q` and clear denominators. The resulting set
/// spans `comm(a)` over `Q` in the last case, which is what double-commutant
/// membership needs.
pub fn centralizer_generators(a: &SquareMatrix) -> Result<Vec<SquareMatrix>> {
    let (ring, k) = (a.ring(), a.dim());
    let system = commutator_system(a);
    let gens = match ring {
        _ if ring.is_field() => nullspace(ring, system, k * k)
            .iter()
            .map(|v| to_matrix(ring, k, v))
            .collect(),
        RingDescriptor::IntegersMod(n) => {
            let rows: Vec<Vec<u64>> = system
                .iter()
                .map(|row| row.iter().map(|x| x.numer().to_u64().expect("residue")).collect())
                .collect();
            kernel_generators_mod(&rows, k * k, n)
                .into_iter()
                .map(|v| SquareMatrix::from_fn(ring, k, |i, j| ring.from_int(v[i * k + j])))
                .collect()
        }
        _ => {
            let q = RingDescriptor::Rationals;
            let a_q = a.to_ring(q)?;
            nullspace(q, commutator_system(&a_q), k * k)
                .iter()
                .map(|v| {
                    let cleared = clear_denominators(v);
                    SquareMatrix::from_fn(ring, k, |i, j| {
                        ring.element(cleared[i * k + j].clone()).expect("integral after clearing")
                    })
                })
                .collect()
        }
    };
    Ok(gens)
}

/// `b` commutes with everything that commutes with `a`.
pub fn in_double_commutant(b: &SquareMatrix, a: &SquareMatrix) -> Result<bool> {
    if b.ring() != a.ring() {
        return Err(crate::error::Error::DescriptorMismatch { left: b.ring(), right: a.ring() });
    }
    if b.dim() != a.dim() {
        return Err(crate::error::Error::DimensionMismatch { left: b.dim(), right: a.dim() });
    }
    Ok(Centralizer::of(a)?.double_commutant_contains(b))
}
