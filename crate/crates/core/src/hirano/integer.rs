use super::{hirano_field, HiranoWitness};
use crate::error::{Error, Result};
use crate::matrices::SquareMatrix;
use crate::rings::RingDescriptor;

/// The three ways a 2x2 integer matrix can be Hirano invertible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegerCase {
    SquareZero,
    UnipotentSquare,
    IdempotentSquare,
    NoHirano,
}

impl IntegerCase {
    pub fn name(&self) -> &'static str {
        match self {
            IntegerCase::SquareZero => "square-zero",
            IntegerCase::UnipotentSquare => "unipotent-square",
            IntegerCase::IdempotentSquare => "idempotent-square",
            IntegerCase::NoHirano => "no-hirano",
        }
    }
}

fn require_integer(a: &SquareMatrix) -> Result<()> {
    if a.ring() != RingDescriptor::Integers {
        return Err(Error::Unsupported(format!("expected a matrix over Z, got {}", a.ring())));
    }
    Ok(())
}

/// `A^2 = 0`, `(I - A^2)^2 = 0` or `A^2 = A^4`, checked in that order.
pub fn classify_integer_2x2(a: &SquareMatrix) -> Result<IntegerCase> {
    require_integer(a)?;
    if a.dim() != 2 {
        return Err(Error::Unsupported(format!("expected a 2x2 matrix, got {}x{}", a.dim(), a.dim())));
    }
    let a2 = a * a;
    let d = &SquareMatrix::identity(a.ring(), 2) - &a2;
    Ok(if a2.is_zero() {
        IntegerCase::SquareZero
    } else if (&d * &d).is_zero() {
        IntegerCase::UnipotentSquare
    } else if &a2 * &a2 == a2 {
        IntegerCase::IdempotentSquare
    } else {
        IntegerCase::NoHirano
    })
}

/// Any dimension: solve over `Q`, keep the witness when it is integral.
/// The inverse is unique, so a non-integral rational witness means none
/// exists over `Z`.
pub fn hirano_integer(a: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    require_integer(a)?;
    let Some(wq) = hirano_field(&a.to_ring(RingDescriptor::Rationals)?)? else {
        return Ok(None);
    };
    if !wq.h.entries().iter().all(|x| x.is_integer()) {
        return Ok(None);
    }
    let h = wq.h.to_ring(RingDescriptor::Integers)?;
    HiranoWitness::certify(a, h).map(Some)
}

/// The 2x2 path, where the rational witness must be integral whenever it
/// exists, and existence must match [`classify_integer_2x2`].
pub fn hirano_integer_2x2(a: &SquareMatrix) -> Result<(IntegerCase, Option<HiranoWitness>)> {
    let case = classify_integer_2x2(a)?;
    let wq = hirano_field(&a.to_ring(RingDescriptor::Rationals)?)?;
    let w = match wq {
        None => None,
        Some(wq) => {
            if !wq.h.entries().iter().all(|x| x.is_integer()) {
                return Err(Error::AxiomViolation(format!("rational witness {} is not integral", wq.h)));
            }
            Some(HiranoWitness::certify(a, wq.h.to_ring(RingDescriptor::Integers)?)?)
        }
    };
    if w.is_some() != (case != IntegerCase::NoHirano) {
        return Err(Error::AxiomViolation(format!(
            "{a}: classifier says {} but construction {}",
            case.name(),
            if w.is_some() { "succeeded" } else { "failed" }
        )));
    }
    Ok((case, w))
}
