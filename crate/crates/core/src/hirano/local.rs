use super::{hirano_from_idempotent, HiranoWitness};
use crate::error::{Error, Result};
use crate::matrices::SquareMatrix;
use crate::rings::{quadratic_roots_in_ring, RingElement};

/// Membership data gathered before a 2x2 matrix is placed in a case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalChecks {
    pub det: RingElement,
    pub trace_sq: RingElement,
    pub det_sq: RingElement,
    pub det_in_j: bool,
    pub trace_sq_in_j: bool,
    pub trace_sq_in_1_plus_j: bool,
    pub det_sq_in_1_plus_j: bool,
    pub trace_sq_in_2_plus_j: bool,
    /// Only evaluated on the mixed branch.
    pub quadratic_solvable: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Case {
    /// `det A, tr A^2 in J`: the idempotent is 0.
    RadicalSquare,
    /// `det^2 A in 1+J, tr A^2 in 2+J`: the idempotent is I.
    UnitSquare,
    /// `det A in J, tr A^2 in 1+J` and the quadratic splits.
    Mixed {
        x1: RingElement,
        x2: RingElement,
        transform: SquareMatrix,
        discriminant_sqrt: RingElement,
    },
    NoHirano { failed: &'static str },
}

impl Case {
    pub fn name(&self) -> &'static str {
        match self {
            Case::RadicalSquare => "radical-square",
            Case::UnitSquare => "unit-square",
            Case::Mixed { .. } => "mixed",
            Case::NoHirano { .. } => "no-hirano",
        }
    }

    pub fn failed(&self) -> Option<&'static str> {
        match self {
            Case::NoHirano { failed } => Some(failed),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub case: Case,
    pub checks: LocalChecks,
}

fn require_local(a: &SquareMatrix, dims: &[usize]) -> Result<()> {
    if !a.ring().is_local() {
        return Err(Error::Unsupported(format!("{} is not a local ring", a.ring())));
    }
    if !dims.contains(&a.dim()) {
        return Err(Error::Unsupported(format!(
            "local classifier handles dimension {dims:?}, got {}",
            a.dim()
        )));
    }
    Ok(())
}

fn swap() -> [[i64; 2]; 2] {
    [[0, 1], [1, 0]]
}

/// `U = [[b, a - x1], [x1 - a, c]]` for `A^2 = [[a, b], [c, d]]`, valid when
/// `a` is a unit; otherwise the same construction on the swapped matrix.
fn mixed_transform(a2: &SquareMatrix, x1: &RingElement) -> SquareMatrix {
    let r = a2.ring();
    let build = |m: &SquareMatrix| {
        let (a, b, c) = (m.get(0, 0), m.get(0, 1), m.get(1, 0));
        SquareMatrix::from_fn(r, 2, |i, j| match (i, j) {
            (0, 0) => b.clone(),
            (0, 1) => r.sub(a, x1),
            (1, 0) => r.sub(x1, a),
            _ => c.clone(),
        })
    };
    if r.is_unit(a2.get(0, 0)) {
        build(a2)
    } else {
        let s = SquareMatrix::from_i64(r, swap());
        &s * &build(&(&(&s * a2) * &s))
    }
}

/// Decides which case a 2x2 matrix over a local ring falls in.
pub fn classify_local_2x2(a: &SquareMatrix) -> Result<Classification> {
    require_local(a, &[2])?;
    let r = a.ring();
    let a2 = a * a;
    let det = a.det();
    let trace_sq = a2.trace();
    let det_sq = r.mul(&det, &det);
    let mut checks = LocalChecks {
        det_in_j: r.in_jacobson_radical(&det),
        trace_sq_in_j: r.in_jacobson_radical(&trace_sq),
        trace_sq_in_1_plus_j: r.in_coset_of_radical(&trace_sq, 1),
        det_sq_in_1_plus_j: r.in_coset_of_radical(&det_sq, 1),
        trace_sq_in_2_plus_j: r.in_coset_of_radical(&trace_sq, 2),
        quadratic_solvable: None,
        det,
        trace_sq,
        det_sq,
    };

    let case = if checks.det_in_j {
        if checks.trace_sq_in_j {
            Case::RadicalSquare
        } else if checks.trace_sq_in_1_plus_j {
            match quadratic_roots_in_ring(r, &checks.trace_sq, &checks.det_sq) {
                Some((x1, x2)) => {
                    checks.quadratic_solvable = Some(true);
                    let transform = mixed_transform(&a2, &x1);
                    Case::Mixed { discriminant_sqrt: r.sub(&x1, &x2), x1, x2, transform }
                }
                None => {
                    checks.quadratic_solvable = Some(false);
                    Case::NoHirano { failed: "quadratic-unsolvable" }
                }
            }
        } else {
            Case::NoHirano { failed: "trace-not-in-J-or-1+J" }
        }
    } else if !checks.det_sq_in_1_plus_j {
        Case::NoHirano { failed: "det-squared-not-in-1+J" }
    } else if !checks.trace_sq_in_2_plus_j {
        Case::NoHirano { failed: "trace-not-in-2+J" }
    } else {
        Case::UnitSquare
    };

    if let Case::Mixed { x1, x2, transform, discriminant_sqrt } = &case {
        check_mixed(&a2, &checks, x1, x2, transform, discriminant_sqrt)?;
    }
    Ok(Classification { case, checks })
}

fn check_mixed(
    a2: &SquareMatrix,
    checks: &LocalChecks,
    x1: &RingElement,
    x2: &RingElement,
    u: &SquareMatrix,
    disc: &RingElement,
) -> Result<()> {
    let r = a2.ring();
    let inv = u
        .try_inverse()
        .ok_or_else(|| Error::AxiomViolation(format!("transform {u} is not invertible")))?;
    let diag = SquareMatrix::from_fn(r, 2, |i, j| match (i, j) {
        (0, 0) => x1.clone(),
        (1, 1) => x2.clone(),
        _ => r.zero(),
    });
    let ok = &(&inv * a2) * u == diag
        && r.add(x1, x2) == checks.trace_sq
        && r.mul(x1, x2) == checks.det_sq
        && r.mul(disc, disc) == r.sub(&r.mul(&checks.trace_sq, &checks.trace_sq), &r.mul(&r.from_i64(4), &checks.det_sq))
        && r.in_jacobson_radical(x1)
        && r.in_coset_of_radical(x2, 1);
    if ok {
        Ok(())
    } else {
        Err(Error::AxiomViolation("mixed-case transform does not diagonalise A^2".into()))
    }
}

/// Necessary conditions any Hirano-invertible 2x2 matrix meets: `A^2` in
/// `M_2(J)`, `(I - A^2)^2` in `M_2(J)`, or `chi(A^2)` has roots in `J` and `1+J`.
fn necessary_conditions_hold(a: &SquareMatrix) -> bool {
    let r = a.ring();
    let a2 = a * a;
    let id = SquareMatrix::identity(r, 2);
    let d = &id - &a2;
    if a2.entries_in_radical() || (&d * &d).entries_in_radical() {
        return true;
    }
    let det = a2.det();
    let tr = a2.trace();
    quadratic_roots_in_ring(r, &tr, &det)
        .is_some_and(|(x1, x2)| r.in_jacobson_radical(&x1) && r.in_coset_of_radical(&x2, 1))
}

fn witness_for_case(a: &SquareMatrix, case: &Case) -> Result<Option<HiranoWitness>> {
    let r = a.ring();
    let p = match case {
        Case::RadicalSquare => SquareMatrix::zero(r, 2),
        Case::UnitSquare => SquareMatrix::identity(r, 2),
        Case::Mixed { transform, .. } => {
            let inv = transform.try_inverse().expect("checked in classification");
            &(transform * &SquareMatrix::diag(r, &[0, 1])) * &inv
        }
        Case::NoHirano { .. } => return Ok(None),
    };
    let w = hirano_from_idempotent(a, &p)?;
    if !necessary_conditions_hold(a) {
        return Err(Error::AxiomViolation(format!("witness for {a} violates the 2x2 necessary conditions")));
    }
    Ok(Some(w))
}

/// Classification plus the constructed witness for a 2x2 matrix over a local ring.
pub fn hirano_local_2x2(a: &SquareMatrix) -> Result<(Classification, Option<HiranoWitness>)> {
    let c = classify_local_2x2(a)?;
    let w = witness_for_case(a, &c.case)?;
    Ok((c, w))
}

/// Local-ring entry point for dimensions 1 and 2. A scalar has an inverse
/// iff its square lies in `J` or in `1 + J`.
pub fn hirano_local(a: &SquareMatrix) -> Result<Option<HiranoWitness>> {
    require_local(a, &[1, 2])?;
    if a.dim() == 2 {
        return Ok(hirano_local_2x2(a)?.1);
    }
    let r = a.ring();
    let sq = r.mul(a.get(0, 0), a.get(0, 0));
    let p = if r.in_jacobson_radical(&sq) {
        SquareMatrix::zero(r, 1)
    } else if r.in_coset_of_radical(&sq, 1) {
        SquareMatrix::identity(r, 1)
    } else {
        return Ok(None);
    };
    hirano_from_idempotent(a, &p).map(Some)
}
