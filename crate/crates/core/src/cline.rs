//! Cline's formula and the multiplicative rules for Hirano inverses.

use crate::error::{Error, Result};
use crate::hirano::{hirano, HiranoWitness};
use crate::matrices::SquareMatrix;

/// For `aba = aca`: `(ba)^h = b ((ac)^h)^2 a`, and `ba` is invertible
/// exactly when `ac` is.
pub fn cline_generalized(a: &SquareMatrix, b: &SquareMatrix, c: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    let ab = a.try_mul(b)?;
    let ac = a.try_mul(c)?;
    if &ab * a != &ac * a {
        return Err(Error::Precondition("aba != aca".into()));
    }
    let ba = b * a;
    match hirano(&ac)? {
        Some(d) => {
            let h = &(b * &(&d.h * &d.h)) * a;
            HiranoWitness::certify(&ba, h).map(Some)
        }
        None => {
            if hirano(&ba)?.is_some() {
                return Err(Error::AxiomViolation(format!("ba = {ba} is invertible but ac = {ac} is not")));
            }
            Ok(None)
        }
    }
}

pub fn cline_classic(a: &SquareMatrix, b: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    cline_generalized(a, b, b)
}

/// `(ab)^h = a^h b^h` for commuting `a`, `b`.
pub fn product_commuting(a: &SquareMatrix, b: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    let ab = a.try_mul(b)?;
    if ab != b * a {
        return Err(Error::Precondition("ab != ba".into()));
    }
    let (Some(ah), Some(bh)) = (hirano(a)?, hirano(b)?) else {
        return Ok(None);
    };
    HiranoWitness::certify(&ab, &ah.h * &bh.h).map(Some)
}

/// `(a^n)^h = (a^h)^n`.
pub fn power_formula(a: &SquareMatrix, n: u32) -> Result<Option<HiranoWitness>> {
    if n < 1 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    let Some(ah) = hirano(a)? else {
        return Ok(None);
    };
    HiranoWitness::certify(&a.pow(n), ah.h.pow(n)).map(Some)
}
