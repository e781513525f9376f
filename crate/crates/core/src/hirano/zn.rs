use super::{hirano_local, HiranoWitness};
use crate::error::{Error, Result};
use crate::matrices::SquareMatrix;
use crate::rings::crt_split;

/// `Z/n` in dimensions 1 and 2: solve on every local factor `Z/p^e`,
/// glue the inverses back together and re-certify over `Z/n`.
pub fn hirano_zn(a: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    let Some(n) = a.ring().modulus() else {
        return Err(Error::Unsupported(format!("expected Z/n, got {}", a.ring())));
    };
    if a.dim() > 2 {
        return Err(Error::Unsupported(format!("Z/n path handles dimension <= 2, got {}", a.dim())));
    }
    let split = crt_split(n);
    let mut parts = Vec::with_capacity(split.factors().len());
    for local in a.project_crt(&split) {
        match hirano_local(&local)? {
            Some(w) => parts.push(w.h),
            None => return Ok(None),
        }
    }
    let h = SquareMatrix::reconstruct_crt(&split, &parts);
    HiranoWitness::certify(a, h).map(Some)
}
