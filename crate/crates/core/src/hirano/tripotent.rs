use super::hirano_field;
use crate::error::{Error, Result};
use crate::matrices::SquareMatrix;
use crate::spectral::spectral_idempotent;

/// `A = E + N` with `E^3 = E`, `N` nilpotent and `EN = NE`, over a field.
/// Exists exactly when `A` has a Hirano inverse.
pub fn tripotent_decompose(a: &SquareMatrix) -> Result<Option<(SquareMatrix, SquareMatrix)>> {
    let ring = a.ring();
    if hirano_field(a)?.is_none() {
        return Ok(None);
    }
    let plus = spectral_idempotent(a, &ring.one())?.eigen_projector();
    let e = if ring.has_characteristic_two() {
        plus
    } else {
        let minus = spectral_idempotent(a, &ring.neg(&ring.one()))?.eigen_projector();
        &plus - &minus
    };
    let n = a - &e;
    let ok = &(&e * &e) * &e == e && n.is_nilpotent() && e.commutes_with(&n);
    if !ok {
        return Err(Error::AxiomViolation(format!("tripotent split of {a} failed")));
    }
    Ok(Some((e, n)))
}
